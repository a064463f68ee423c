window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["ch01_grammars_and_dags.html#grammars-and-dags","ch01_grammars_and_dags.html#enumerating-the-language","ch01_grammars_and_dags.html#parsing","ch02_weighted_grammars.html#weighted-grammars-and-the-erf-recipe","ch02_weighted_grammars.html#estimating-weights-from-a-corpus","ch02_weighted_grammars.html#measuring-fit","ch03_random_fields.html#random-fields","ch03_random_fields.html#per-rule-weights-stop-being-optimal","ch03_random_fields.html#fields-arbitrary-properties-not-just-rules","ch04_field_induction.html#field-induction","ch04_field_induction.html#candidates","ch04_field_induction.html#the-initial-weight","ch04_field_induction.html#readjusting-all-weights","ch04_field_induction.html#the-full-loop","ch05_sampling.html#sampling-with-metropolis-hastings","ch05_sampling.html#proposals","ch05_sampling.html#acceptance","ch05_sampling.html#why-it-works-detailed-balance","ch05_sampling.html#running-chains","ch06_cli.html#the-command-line","ch06_cli.html#file-formats","ch06_cli.html#subcommands"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":2.0}},"df":8,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"5":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"1":{"docs":{},"df":0,"4":{"docs":{"11":{"tf":1.0}},"df":1}},"2":{"docs":{},"df":0,"8":{"docs":{"11":{"tf":1.0}},"df":1}},"3":{"docs":{"18":{"tf":1.7320508075688772}},"df":1},"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"9":{"docs":{},"df":0,"4":{"docs":{},"df":0,"3":{"docs":{"21":{"tf":1.0}},"df":1}}}},"7":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"7":{"docs":{"7":{"tf":1.7320508075688772}},"df":1}},"3":{"docs":{},"df":0,"1":{"docs":{},"df":0,"8":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"5":{"tf":1.0}},"df":1}}}},"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,"7":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"2":{"docs":{"5":{"tf":1.0}},"df":1},"7":{"docs":{"5":{"tf":1.0}},"df":1}},"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"7":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"7":{"docs":{},"df":0,"7":{"docs":{},"df":0,"7":{"docs":{},"df":0,"7":{"docs":{},"df":0,"7":{"docs":{},"df":0,"7":{"docs":{},"df":0,"7":{"docs":{},"df":0,"7":{"docs":{},"df":0,"7":{"docs":{},"df":0,"7":{"docs":{},"df":0,"8":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"1":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":2.23606797749979},"6":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":11,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"1":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2},"4":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"11":{"tf":1.0}},"df":1}}}},"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}},"3":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,"9":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"4":{"docs":{"7":{"tf":1.0}},"df":1}},"2":{"docs":{"11":{"tf":1.7320508075688772},"18":{"tf":1.0},"21":{"tf":2.0},"3":{"tf":2.23606797749979}},"df":4},"3":{"docs":{"18":{"tf":1.0},"21":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":5},"4":{"docs":{"18":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}},"df":5},"6":{"docs":{"18":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":4}},"0":{"docs":{"1":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"21":{"tf":1.0}},"df":4,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"(":{"docs":{},"df":0,"_":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.7320508075688772}},"df":1}}}}},"0":{"docs":{},"df":0,"0":{"docs":{"21":{"tf":1.0}},"df":1}},"^":{"docs":{},"df":0,"6":{"docs":{"20":{"tf":1.0}},"df":1}}},"2":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"20":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4},"4":{"docs":{"7":{"tf":1.0}},"df":1},"5":{"docs":{"21":{"tf":1.0}},"df":1},"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}}},"e":{"docs":{"11":{"tf":2.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":7}},"2":{"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":2.449489742783178},"5":{"tf":1.0},"7":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}},"df":10,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0},"7":{"tf":1.7320508075688772}},"df":2,"5":{"docs":{},"df":0,"0":{"docs":{},"df":0,"7":{"docs":{},"df":0,"0":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"9":{"docs":{},"df":0,"5":{"docs":{},"df":0,"5":{"docs":{},"df":0,"7":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}},"1":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2},"5":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"/":{"docs":{},"df":0,"3":{"docs":{"18":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.7320508075688772}},"df":3},"7":{"docs":{"7":{"tf":1.0}},"df":1},"9":{"docs":{"3":{"tf":1.7320508075688772}},"df":1}},"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"3":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":2.0}},"df":4,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"16":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":2},"4":{"docs":{"16":{"tf":1.0}},"df":1}},"0":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}}},"3":{"docs":{},"df":0,"3":{"docs":{},"df":0,"4":{"docs":{"21":{"tf":1.0}},"df":1}}}},"4":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"13":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772}},"df":5,"2":{"docs":{"18":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":2},"8":{"docs":{},"df":0,"8":{"docs":{},"df":0,"9":{"docs":{"21":{"tf":1.0}},"df":1}}},"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"6":{"docs":{"21":{"tf":1.0}},"df":1}}}},"5":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.0}},"df":5,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1}}}},"6":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0}},"df":7,".":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.4142135623730951}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"7":{"docs":{},"df":0,"8":{"docs":{},"df":0,"1":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}}}},"7":{"docs":{"21":{"tf":1.0},"7":{"tf":1.0}},"df":2,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1}},"5":{"docs":{"11":{"tf":1.0},"21":{"tf":1.0}},"df":2}}},"8":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"9":{"docs":{},"df":0,"5":{"docs":{},"df":0,"2":{"docs":{},"df":0,"3":{"docs":{},"df":0,"8":{"docs":{},"df":0,"0":{"docs":{},"df":0,"9":{"docs":{},"df":0,"5":{"docs":{},"df":0,"1":{"docs":{},"df":0,"7":{"docs":{},"df":0,"8":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}},"3":{"docs":{},"df":0,"8":{"docs":{},"df":0,"9":{"docs":{},"df":0,"7":{"docs":{},"df":0,"9":{"docs":{},"df":0,"7":{"docs":{},"df":0,"3":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"8":{"docs":{},"df":0,"7":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"9":{"docs":{"7":{"tf":1.7320508075688772}},"df":1,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"9":{"docs":{},"df":0,"8":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,"8":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}},"_":{"docs":{"15":{"tf":1.0},"7":{"tf":1.0}},"df":2},"a":{"docs":{},"df":0,"\'":{"docs":{"0":{"tf":1.0}},"df":1},")":{"docs":{},"df":0,")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}},"a":{"docs":{"1":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}},"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"7":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1},"j":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.4142135623730951}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":3}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{"8":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":16}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1,"g":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"16":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1,"i":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.7320508075688772}},"df":1},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"7":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"!":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}},"(":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"z":{"docs":{"8":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1},"1":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"k":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"a":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,":":{"docs":{},"df":0,"\'":{"docs":{},"df":0,"a":{"docs":{},"df":0,"\'":{"docs":{},"df":0,"]":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"b":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,":":{"docs":{},"df":0,"\'":{"docs":{},"df":0,"a":{"docs":{},"df":0,"\'":{"docs":{},"df":0,"]":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"1":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}},"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"f":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"1":{"docs":{"8":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}},"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}},"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}},"q":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1},"1":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"z":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"u":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":5}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}}}}},"v":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"13":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":2.0},"8":{"tf":1.4142135623730951}},"df":9}}}}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0},"21":{"tf":2.6457513110645907}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}},"{":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":4}}}}}}}}}}},"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}},"df":7}}}}}}}}}},"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":5}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}}}}},"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":7}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"j":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"c":{"docs":{},"df":0,"m":{"docs":{},"df":0,"c":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"g":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":10}}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}},"{":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"18":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"b":{"docs":{"0":{"tf":3.605551275463989},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":3.4641016151377544},"21":{"tf":2.6457513110645907},"3":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":8,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,":":{"docs":{},"df":0,"\'":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":5}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":4}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"b":{"docs":{"1":{"tf":1.4142135623730951}},"df":1},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"20":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.7320508075688772},"3":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5}},"t":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"7":{"tf":1.0}},"df":1},"2":{"docs":{"7":{"tf":1.0}},"df":1},"7":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}},"t":{"docs":{"18":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0}},"df":6}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"7":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"21":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}},"d":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951}},"df":2,"i":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}}}}}}},"’":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2}}},"p":{"docs":{"21":{"tf":1.0},"8":{"tf":1.0}},"df":2},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"20":{"tf":1.0},"7":{"tf":1.0}},"df":4}}},"t":{"docs":{"21":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"5":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}}}}}},"g":{"docs":{"15":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":9}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0}},"df":4,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0},"18":{"tf":1.4142135623730951}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}}}}}}}}},"’":{"docs":{"17":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":7}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"k":{"docs":{"17":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":2}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}},"m":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"21":{"tf":1.0}},"df":2},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"21":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":3}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0},"7":{"tf":1.0}},"df":2,"t":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":7}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":2.449489742783178},"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":8,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772}},"df":5,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":4}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951}},"df":2}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"/":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"/":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}},"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"d":{"docs":{"3":{"tf":1.0},"7":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}},"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":2.0},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"21":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":2.449489742783178}},"df":11,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}}},"’":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"m":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{"7":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"o":{"docs":{"4":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.4142135623730951},"3":{"tf":1.7320508075688772},"5":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}},"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":2.23606797749979},"1":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.4142135623730951}},"df":1},"3":{"docs":{"0":{"tf":1.7320508075688772}},"df":1},"4":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"8":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"21":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":2.23606797749979}},"df":9}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"21":{"tf":2.449489742783178},"5":{"tf":1.7320508075688772},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":7}}}}},"o":{"docs":{"7":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{"14":{"tf":1.0}},"df":1,"n":{"docs":{"15":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":5}}},"d":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"m":{"docs":{},"df":0,"b":{"docs":{"8":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"p":{"docs":{"11":{"tf":1.0},"12":{"tf":1.4142135623730951}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"5":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1},"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0}},"df":5,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"q":{"docs":{"0":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951}},"df":2,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.0}},"df":4},"t":{"docs":{"0":{"tf":2.449489742783178},"12":{"tf":1.0},"20":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"f":{"docs":{"21":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}},"g":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"z":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.7320508075688772},"4":{"tf":1.0},"7":{"tf":1.0}},"df":5}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":2.0},"20":{"tf":1.0},"21":{"tf":1.7320508075688772}},"df":5,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":10}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"’":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}},"t":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"4":{"tf":1.0},"7":{"tf":1.0}},"df":7}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1},"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"1":{"docs":{"8":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.7320508075688772}},"df":1}}}},"i":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4,"u":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":2.23606797749979},"11":{"tf":2.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772},"8":{"tf":2.449489742783178},"9":{"tf":1.0}},"df":13,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"z":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":8,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}},"g":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0},"20":{"tf":2.0},"21":{"tf":1.0}},"df":3},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0}},"df":3}}},"t":{"docs":{"13":{"tf":1.0},"5":{"tf":1.0}},"df":2},"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}},"x":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0}},"df":2,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0}},"df":1},"t":{"docs":{"1":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951}},"df":2},"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.7320508075688772}},"df":1}}}}},"o":{"docs":{},"df":0,"w":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}},"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":16},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"21":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2},"m":{"docs":{"16":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}},"r":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":5}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":7},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951}},"df":2}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}},"g":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":10,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0},"8":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{"11":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}},"df":3,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.7320508075688772},"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":2.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":7,"’":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}},"w":{"docs":{"9":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"11":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":7},"g":{"docs":{"1":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}}}}}}},"t":{"docs":{"21":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"d":{"docs":{"1":{"tf":1.0},"20":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951}},"df":2,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"c":{"docs":{"21":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"t":{"docs":{"9":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0}},"df":3,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"20":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":2.0},"9":{"tf":1.0}},"df":12,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":9,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":4}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6}}}}}}}}}}}}}}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"j":{"docs":{"0":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":2}}}},"k":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}}}},"l":{"docs":{"21":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":3,"/":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"/":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":9}}}}},"r":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{"16":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"f":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":5,"o":{"docs":{},"df":0,"v":{"docs":{"7":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2}}}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951}},"df":3}},"s":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"g":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0}},"df":3},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":4}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":16}},"k":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"|":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}},"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"v":{"docs":{"14":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.4142135623730951},"18":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}},"df":4}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}},"x":{"docs":{"21":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"16":{"tf":1.0}},"df":1}},"i":{"docs":{"13":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1}},"x":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":2.0}},"df":6,"l":{"docs":{"20":{"tf":1.0},"21":{"tf":2.449489742783178},"3":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":4,"’":{"docs":{"21":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1,"i":{"docs":{"12":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.7320508075688772}},"df":3}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}},"t":{"docs":{"5":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":2.6457513110645907},"10":{"tf":1.0},"8":{"tf":1.0}},"df":3,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":6,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"a":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"4":{"tf":1.0},"7":{"tf":2.0},"8":{"tf":1.4142135623730951}},"df":5}}}},"t":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1},"h":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"w":{"docs":{"7":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951}},"df":2}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}},"df":10,"c":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":4}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.7320508075688772}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":2,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6}}}},"p":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"7":{"tf":1.0}},"df":1}}}},".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"z":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}},"s":{"docs":{"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951}},"df":3,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}},"t":{"docs":{"21":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.7320508075688772},"20":{"tf":1.4142135623730951}},"df":2},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":8,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0}},"df":3}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}},"u":{"docs":{"10":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"21":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.0},"21":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"v":{"docs":{"8":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3,"l":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"3":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.0}},"df":5}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"21":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1,"t":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":2.23606797749979},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"20":{"tf":1.0},"21":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":2.23606797749979},"9":{"tf":1.4142135623730951}},"df":12},"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"a":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}}}}}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"b":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":5}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}},"’":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}},"s":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}},"q":{"docs":{"16":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,")":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}}}}}},"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}},"o":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":2.449489742783178}},"df":1},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}},"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0},"21":{"tf":1.0}},"df":2},"i":{"docs":{},"df":0,"o":{"docs":{"16":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"w":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}},"e":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"d":{"docs":{"12":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"v":{"docs":{"0":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"l":{"docs":{"4":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"v":{"docs":{"9":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"21":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"5":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951}},"df":2}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"h":{"docs":{"0":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.7320508075688772},"13":{"tf":1.0}},"df":2}}},"w":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":4.123105625617661},"1":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"20":{"tf":2.6457513110645907},"21":{"tf":2.6457513110645907},"3":{"tf":1.7320508075688772},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":2.0},"8":{"tf":1.4142135623730951}},"df":11,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}},"’":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"n":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}},"s":{"docs":{"0":{"tf":2.449489742783178},"10":{"tf":1.0},"20":{"tf":2.6457513110645907},"21":{"tf":2.23606797749979},"3":{"tf":1.7320508075688772}},"df":5,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,":":{"docs":{},"df":0,"\'":{"docs":{},"df":0,"a":{"docs":{},"df":0,"\'":{"docs":{},"df":0,"]":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,":":{"docs":{},"df":0,"*":{"docs":{},"df":0,"2":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"b":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,":":{"docs":{},"df":0,"\'":{"docs":{},"df":0,"a":{"docs":{},"df":0,"\'":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,":":{"docs":{},"df":0,"\'":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":3},"p":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"18":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.0}},"df":5}},"n":{"docs":{"11":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1,"d":{"docs":{"18":{"tf":2.0},"21":{"tf":2.6457513110645907}},"df":2}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"21":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":3}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"v":{"docs":{"18":{"tf":1.0}},"df":1}},"t":{"docs":{"4":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":8}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}},"p":{"docs":{"19":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":5}},"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"21":{"tf":1.0}},"df":2}}},"x":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":4}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}},"v":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.4142135623730951}},"df":1,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":2.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"20":{"tf":1.0}},"df":3}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"y":{"docs":{"10":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":2,"’":{"docs":{"13":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2}},"p":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"21":{"tf":1.0}},"df":1}}}},"h":{"docs":{"14":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}}},"m":{"docs":{"14":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":4,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951}},"df":2}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":10,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"16":{"tf":1.4142135623730951}},"df":3,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"[":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.4142135623730951}},"df":1},"2":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}}}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"x":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"8":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1,"g":{"docs":{"8":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"7":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{"8":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}},"p":{"docs":{"14":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951}},"df":2,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"k":{"docs":{"21":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"e":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"12":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"7":{"tf":1.7320508075688772}},"df":8,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0}},"df":1}}}},"’":{"docs":{"3":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"4":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"21":{"tf":1.7320508075688772}},"df":1}}}}}},"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.7320508075688772}},"df":1}}}}}}}}}},"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}},"o":{"docs":{"0":{"tf":2.23606797749979},"1":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":7}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"f":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"8":{"tf":1.0}},"df":3,"i":{"docs":{"0":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":9,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":9}}}}}}}}}}}}}}}}}}}}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{"11":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":8}}}}},"p":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"s":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"10":{"tf":2.449489742783178},"11":{"tf":2.23606797749979},"12":{"tf":2.449489742783178},"13":{"tf":2.23606797749979},"15":{"tf":2.23606797749979},"16":{"tf":2.449489742783178},"17":{"tf":2.449489742783178},"18":{"tf":2.449489742783178},"2":{"tf":1.4142135623730951},"3":{"tf":2.449489742783178},"4":{"tf":2.0},"5":{"tf":2.6457513110645907},"7":{"tf":3.3166247903554},"8":{"tf":2.23606797749979}},"df":16}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0}},"df":5}}},"e":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.0}},"df":5,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":4}},"2":{"docs":{"8":{"tf":1.0}},"df":1},"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0}},"df":3}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.7320508075688772}},"df":1},"b":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"a":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"2":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}},"<":{"docs":{},"df":0,"_":{"docs":{"10":{"tf":1.0},"3":{"tf":1.0}},"df":2},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}},"u":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"21":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{"12":{"tf":1.0}},"df":1,"[":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"y":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":4}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":2.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"20":{"tf":2.23606797749979},"21":{"tf":2.23606797749979},"3":{"tf":2.0},"4":{"tf":1.4142135623730951},"5":{"tf":2.449489742783178},"7":{"tf":2.8284271247461903},"8":{"tf":3.0},"9":{"tf":1.4142135623730951}},"df":13,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1}}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1}}},"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"7":{"tf":1.4142135623730951}},"df":1},"3":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"5":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":3}}}},"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1},"k":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0}},"df":2},"s":{"docs":{"5":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}},"x":{"docs":{"16":{"tf":2.23606797749979},"17":{"tf":1.0},"7":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}},"y":{"docs":{"16":{"tf":1.7320508075688772},"17":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"z":{"docs":{"21":{"tf":1.0},"7":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"e":{"docs":{"7":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}},"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0}},"df":3}},"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":8}}},"l":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}},"t":{"docs":{"5":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":6}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":5}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":5}}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"j":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"n":{"docs":{"18":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":5}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.0}},"df":6}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"title":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"e":{"docs":{"7":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"l":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}},"t":{"docs":{"5":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"j":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"n":{"docs":{"18":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":5}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"An attribute-value grammar in this crate is a context-free backbone whose\\nrules may carry path equations. A path equation forces two positions of a\\nrule’s local tree to denote the very same node, so a derivation no longer\\nunfolds into a tree: it maps to a rooted, node- and edge-labelled dag, and\\nsome derivations map to nothing at all because their equations clash. Grammars are written in a small line-based format. Categories are bare\\nidentifiers, terminal atoms are quoted, and eq i.path = j.path equates the\\nnode reached from rhs slot i along path with the one reached from slot j. The running example of this book is a six-rule grammar in two flavours.\\nThe context-free flavour: #![allow(unused)] fn main() {\\nuse avfield::AvGrammar; let cf: AvGrammar = \\" start S rule 1: S -> A A rule 2: S -> B rule 3: A -> \'a\' rule 4: A -> \'b\' rule 5: B -> \'a\' \'a\' rule 6: B -> \'b\' \'b\'\\n\\".parse().unwrap();\\nassert_eq!(cf.rules.len(), 6); } and the attribute-value flavour, identical except that rule 1 forces its two A daughters to share their value: #![allow(unused)] fn main() {\\nuse avfield::AvGrammar;\\nuse avfield::grammar::{cf_analogue, derive_dag, Derivation}; let av: AvGrammar = \\" start S rule 1: S -> A A | eq 1.1 = 2.1 rule 2: S -> B rule 3: A -> \'a\' rule 4: A -> \'b\' rule 5: B -> \'a\' \'a\' rule 6: B -> \'b\' \'b\'\\n\\".parse().unwrap(); // Stripping the equations recovers the context-free backbone, rule for rule.\\nlet skeleton = cf_analogue(&av);\\nassert_eq!(skeleton.rules.len(), 6); // A derivation that satisfies the constraint: both A\'s rewrite to \'a\', and\\n// the equation merges the two atoms into one shared node. Four nodes, not\\n// five.\\nlet twin = Derivation::apply(1, vec![ Derivation::apply(3, vec![Derivation::leaf(\\"a\\")]), Derivation::apply(3, vec![Derivation::leaf(\\"a\\")]),\\n]);\\nlet dag = derive_dag(&av, &twin).unwrap();\\nassert_eq!(dag.node_count(), 4);\\nassert_eq!(dag.canonical(), \\"S[1:A[1:\'a\'],2:A[1:*2]]\\"); // A derivation that violates it: \'a\' cannot unify with \'b\'.\\nlet mixed = Derivation::apply(1, vec![ Derivation::apply(3, vec![Derivation::leaf(\\"a\\")]), Derivation::apply(4, vec![Derivation::leaf(\\"b\\")]),\\n]);\\nassert!(derive_dag(&av, &mixed).is_err()); } The canonical string shown above is the dag’s identity: nodes are printed in\\na label-sorted preorder walk and re-entrant nodes appear as *k\\nback-references to their first occurrence. Two dags are equal exactly when\\ntheir canonical strings are, which is how sharing is distinguished from\\ncopying.","breadcrumbs":"Grammars and dags » Grammars and dags","id":"0","title":"Grammars and dags"},"1":{"body":"Because unification prunes derivations, the attribute-value language is\\nsmaller than the context-free one. Enumeration is depth-bounded and\\ndeterministic (lexicographic in rule-id sequences), and deduplicates by dag\\nisomorphism: #![allow(unused)] fn main() {\\nuse avfield::fixtures::{av_grammar, cf_grammar};\\nuse avfield::grammar::enumerate_language; let av = enumerate_language(&av_grammar(), 10);\\nassert_eq!(av.items.len(), 4); // aa-twins, bb-twins, flat-aa, flat-bb\\nassert!(!av.truncated); let cf = enumerate_language(&cf_grammar(), 10);\\nassert_eq!(cf.items.len(), 6); // the two mixed trees survive here } The depth bound is explicit so that an infinite language fails loudly\\ninstead of hanging; when some derivation is cut off, the enumeration carries\\na truncation flag.","breadcrumbs":"Grammars and dags » Enumerating the language","id":"1","title":"Enumerating the language"},"10":{"body":"The candidate pool is deliberately small: all single-node patterns over the\\ngrammar’s labels, plus every pattern obtained by connecting a property\\nalready in the field to another field property or an atom with one arc.\\nArcs are restricted to parent-label/edge/child-label shapes actually\\nobserved in the language, and the result must stay a rooted dag. #![allow(unused)] fn main() {\\nuse avfield::fixtures::{av_grammar, uniformizing_weights};\\nuse avfield::field::{CountSemantics, FieldModel, InitialMode, Property};\\nuse avfield::grammar::{cf_analogue, NodeLabel};\\nuse avfield::induction::{generate_candidates, CandidatePool};\\nuse avfield::scfg::CfModel;\\nuse avfield::weight::Weight; let g = av_grammar();\\nlet initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();\\nlet mut field = FieldModel::new(g, initial, InitialMode::Uniform, vec![], vec![]).unwrap();\\nlet table = field.language(10).unwrap(); // Null field: only the five atoms (S, A, B, \'a\', \'b\') are candidates.\\nlet cands = generate_candidates(&field, &table.dags, CandidatePool::Presence);\\nassert_eq!(cands.atoms.len(), 5);\\nassert!(cands.combos.is_empty()); // Once \'a\' is in the field, one-arc extensions appear.\\nfield.push_property( Property::atom(NodeLabel::Atom(\\"a\\".into()), CountSemantics::Presence), Weight::one(),\\n);\\nlet cands = generate_candidates(&field, &table.dags, CandidatePool::Presence);\\nlet names: Vec<_> = cands.combos.iter().map(|p| p.pattern.canonical().to_string()).collect();\\nassert!(names.contains(&\\"A[1:\'a\']\\".to_string()));\\nassert!(names.contains(&\\"B[1:\'a\']\\".to_string())); }","breadcrumbs":"Field induction » Candidates","id":"10","title":"Candidates"},"11":{"body":"A candidate’s weight is chosen so that the property’s expectation under the\\nextended field equals its empirical expectation. That condition has a\\nunique solution, found by bisection on the log weight (the left-hand side\\nis strictly monotone there). On the running corpus, the atom \'a\' in\\npresence mode splits the language into masses 7/12 and 5/12 while the null\\nfield assigns the halves 1/2 each — its best weight works out to 7/5 and\\ndrops the divergence from about 0.028 to about 0.014. The atom B splits\\nmass 1/2 against 1/2, which the null field already gets right: its best\\nweight is 1 and its score is zero. #![allow(unused)] fn main() {\\nuse avfield::fixtures::{av_corpus, av_grammar, uniformizing_weights};\\nuse avfield::field::{empirical_from_corpus, CountSemantics, FieldModel, InitialMode, Property};\\nuse avfield::grammar::{cf_analogue, NodeLabel};\\nuse avfield::induction::{ generate_candidates, select_property, solve_initial_weight, CandidatePool, ExactContext, InductionConfig,\\n};\\nuse avfield::scfg::CfModel; let g = av_grammar();\\nlet initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();\\nlet field = FieldModel::new(g, initial, InitialMode::Uniform, vec![], vec![]).unwrap();\\nlet table = field.language(10).unwrap();\\nlet emp = empirical_from_corpus(&av_corpus());\\nlet ctx = ExactContext::build(&field, &table, &emp).unwrap(); let splitter = Property::atom(NodeLabel::Atom(\\"a\\".into()), CountSemantics::Presence);\\nlet scored = solve_initial_weight(&ctx, &splitter, 1e-10);\\nassert!((scored.best_beta - 1.4).abs() < 1e-6);\\nassert!(scored.new_divergence < ctx.old_divergence); let blocked = Property::atom(NodeLabel::Category(\\"B\\".into()), CountSemantics::Presence);\\nassert!((solve_initial_weight(&ctx, &blocked, 1e-10).best_beta - 1.0).abs() < 1e-6); // Selection scans the whole pool and picks the splitter.\\nlet cands = generate_candidates(&field, &table.dags, CandidatePool::Both);\\nlet best = select_property(&ctx, &cands, &InductionConfig::default()).unwrap();\\nassert_eq!(best.property, splitter); }","breadcrumbs":"Field induction » The initial weight","id":"11","title":"The initial weight"},"12":{"body":"After a property joins, every weight is re-tuned by iterative scaling: each\\nround solves, per property, an expectation-matching equation in which the\\nproperty count is damped by the dag’s total property count, then applies\\nall update factors at once. The factor solved for is applied\\nmultiplicatively, so the fixpoint — all factors 1 — is exactly the\\nmaximum-likelihood condition, and divergence never increases from round to\\nround. (The assign-instead-of-multiply reading is available behind UpdateRule::Assign for comparison.) With the six rule local trees as properties, scaling walks per-rule\\nweighting all the way to the exact optimum of chapter 3: #![allow(unused)] fn main() {\\nuse avfield::fixtures::{av_corpus, av_grammar, uniformizing_weights};\\nuse avfield::field::{empirical_from_corpus, FieldModel, InitialMode};\\nuse avfield::grammar::cf_analogue;\\nuse avfield::induction::{adjust_weights, rule_local_tree_properties, InductionConfig};\\nuse avfield::scfg::CfModel;\\nuse avfield::weight::Weight; let g = av_grammar();\\nlet initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();\\nlet mut field = FieldModel::new( g.clone(), initial, InitialMode::Uniform, rule_local_tree_properties(&g), vec![Weight::one(); 6],\\n).unwrap();\\nlet table = field.language(10).unwrap();\\nlet emp = empirical_from_corpus(&av_corpus());\\nlet report = adjust_weights(&mut field, &table, &emp, &InductionConfig::default()).unwrap();\\nassert!(report.final_divergence < 1e-6);\\nfor w in report.divergence_log.windows(2) { assert!(w[1] <= w[0] + 1e-10);\\n} }","breadcrumbs":"Field induction » Readjusting all weights","id":"12","title":"Readjusting all weights"},"13":{"body":"Putting it together: the loop fits the corpus to numerical zero with three\\nproperties, and the trace records each step’s pattern, weight and\\ndivergence. #![allow(unused)] fn main() {\\nuse avfield::fixtures::{av_corpus, av_grammar, uniformizing_weights};\\nuse avfield::field::InitialMode;\\nuse avfield::grammar::cf_analogue;\\nuse avfield::induction::{induce_field, InductionConfig};\\nuse avfield::scfg::CfModel; let g = av_grammar();\\nlet initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();\\nlet (field, trace) = induce_field( &g, initial, InitialMode::Uniform, &av_corpus(), &InductionConfig::default(),\\n).unwrap();\\nassert!(trace.final_divergence < 1e-4);\\nassert!(field.properties().len() <= 4);\\nprintln!(\\"{}\\", trace.to_tsv()); } When the language is too large to enumerate (the exact_threshold of the\\nconfig), the expectations inside both the initial-weight solve and the\\nscaling rounds are estimated from a sampled mini-corpus instead — which is\\nwhat the next chapter is for.","breadcrumbs":"Field induction » The full loop","id":"13","title":"The full loop"},"14":{"body":"A stochastic context-free grammar is its own sampler: expand the start\\nsymbol top-down, drawing each rule with its weight. A field distribution\\nhas no such transparent sampler — weights neither sum to one per left-hand\\nside nor attach to rules. The fix is a Markov chain whose proposals come\\nfrom the context-free backbone.","breadcrumbs":"Sampling with Metropolis-Hastings » Sampling with Metropolis-Hastings","id":"14","title":"Sampling with Metropolis-Hastings"},"15":{"body":"In Scfg initial mode, proposing a dag means running a stochastic\\nderivation of the backbone and discarding it if unification fails — the\\nsurviving dags are distributed exactly as the initial distribution p. #![allow(unused)] fn main() {\\nuse avfield::fixtures::{av_grammar, demo_model};\\nuse avfield::field::{FieldModel, InitialMode};\\nuse avfield::mcmc::{propose_dag, ChainConfig};\\nuse rand::SeedableRng;\\nuse rand_chacha::ChaCha12Rng; let m = FieldModel::new(av_grammar(), demo_model(), InitialMode::Scfg, vec![], vec![]).unwrap();\\nlet table = m.language(10).unwrap();\\nlet mut rng = ChaCha12Rng::seed_from_u64(1);\\nlet cfg = ChainConfig::default();\\nlet mut failures = 0;\\nfor _ in 0..2_000 { let p = propose_dag(&m, &mut rng, &cfg).unwrap(); assert!(table.position(&p.dag).is_some()); failures += p.failures;\\n}\\n// Mixed derivations are drawn and discarded along the way.\\nassert!(failures > 0); }","breadcrumbs":"Sampling with Metropolis-Hastings » Proposals","id":"15","title":"Proposals"},"16":{"body":"A proposed dag y replaces the current dag x with probability min(1, q(y)p(x) / (q(x)p(y))); otherwise the chain repeats x. Because q is the normalized product of field weight and p, both the normalizer\\nand p cancel, leaving a bare ratio of field weights — cheap to evaluate\\nand computed in log space. The crate asserts the cancellation by also\\nevaluating the textbook form: #![allow(unused)] fn main() {\\nuse avfield::fixtures::{av_grammar, uniformizing_weights};\\nuse avfield::field::{CountSemantics, FieldModel, InitialMode, Property};\\nuse avfield::grammar::{cf_analogue, Dag, NodeLabel};\\nuse avfield::mcmc::{acceptance_probability, acceptance_probability_unsimplified};\\nuse avfield::scfg::CfModel;\\nuse avfield::weight::Weight; let shared = Property::new( Dag::build( vec![NodeLabel::Category(\\"A\\".into()), NodeLabel::Atom(\\"a\\".into())], vec![(0, \\"1\\".into(), 1)], 0, ).unwrap(), CountSemantics::Embeddings,\\n);\\nlet marker = Property::atom(NodeLabel::Category(\\"B\\".into()), CountSemantics::Embeddings);\\nlet g = av_grammar();\\nlet initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();\\nlet m = FieldModel::new( g, initial, InitialMode::Scfg, vec![shared, marker], vec![Weight::from_f64(std::f64::consts::SQRT_2), Weight::from_ratio(3, 2)],\\n).unwrap();\\nlet table = m.language(10).unwrap(); // Field weights are (2, 1, 3/2, 3/2): moving from the first dag to the\\n// third accepts with probability 3/4; the reverse always accepts.\\nlet down = acceptance_probability(&m, &table.dags[0], &table.dags[2]);\\nassert!((down - 0.75).abs() < 1e-12);\\nassert_eq!(acceptance_probability(&m, &table.dags[2], &table.dags[0]), 1.0); for x in &table.dags { for y in &table.dags { let simple = acceptance_probability(&m, x, y); let full = acceptance_probability_unsimplified(&m, &table, x, y).unwrap(); assert!((simple - full).abs() < 1e-12); }\\n} }","breadcrumbs":"Sampling with Metropolis-Hastings » Acceptance","id":"16","title":"Acceptance"},"17":{"body":"The chain’s transition kernel satisfies detailed balance with respect to\\nthe field distribution — probability flow from x to y equals the flow\\nback — which makes the field distribution stationary. On an enumerable\\nlanguage both statements can be checked against the exact kernel: #![allow(unused)] fn main() { use avfield::fixtures::{av_grammar, uniformizing_weights}; use avfield::field::{CountSemantics, FieldModel, InitialMode, Property}; use avfield::grammar::{cf_analogue, Dag, NodeLabel}; use avfield::scfg::CfModel; use avfield::weight::Weight;\\nuse avfield::mcmc::detailed_balance_check; let shared = Property::new( Dag::build( vec![NodeLabel::Category(\\"A\\".into()), NodeLabel::Atom(\\"a\\".into())], vec![(0, \\"1\\".into(), 1)], 0, ).unwrap(), CountSemantics::Embeddings, ); let marker = Property::atom(NodeLabel::Category(\\"B\\".into()), CountSemantics::Embeddings); let g = av_grammar(); let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap(); let m = FieldModel::new( g, initial, InitialMode::Scfg, vec![shared, marker], vec![Weight::from_f64(std::f64::consts::SQRT_2), Weight::from_ratio(3, 2)], ).unwrap();\\nlet table = m.language(10).unwrap();\\nlet report = detailed_balance_check(&m, &table).unwrap();\\nassert!(report.max_balance_violation < 1e-12);\\nassert!(report.max_stationarity_residual < 1e-12); }","breadcrumbs":"Sampling with Metropolis-Hastings » Why it works: detailed balance","id":"17","title":"Why it works: detailed balance"},"18":{"body":"A chain is configured with burn-in, length, thinning and a seed; identical\\nseeds give bit-identical summaries. The retained sample converges to the\\nfield distribution, and per-property expectations estimated from it\\nconverge to their exact values: #![allow(unused)] fn main() {\\nuse avfield::fixtures::{av_grammar, uniformizing_weights};\\nuse avfield::field::{CountSemantics, FieldModel, InitialMode, Property};\\nuse avfield::grammar::{cf_analogue, Dag, NodeLabel};\\nuse avfield::mcmc::{run_chain, ChainConfig};\\nuse avfield::scfg::CfModel;\\nuse avfield::weight::Weight; let shared = Property::new( Dag::build( vec![NodeLabel::Category(\\"A\\".into()), NodeLabel::Atom(\\"a\\".into())], vec![(0, \\"1\\".into(), 1)], 0, ).unwrap(), CountSemantics::Embeddings,\\n);\\nlet marker = Property::atom(NodeLabel::Category(\\"B\\".into()), CountSemantics::Embeddings);\\nlet g = av_grammar();\\nlet initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();\\nlet m = FieldModel::new( g, initial, InitialMode::Scfg, vec![shared, marker], vec![Weight::from_f64(std::f64::consts::SQRT_2), Weight::from_ratio(3, 2)],\\n).unwrap(); let config = ChainConfig { burn_in: 1_000, length: 30_000, seed: 42, ..ChainConfig::default() };\\nlet summary = run_chain(&m, &config).unwrap();\\nassert_eq!(summary.retained, 30_000); // Exact target: (1/3, 1/6, 1/4, 1/4).\\nlet table = m.language(10).unwrap();\\nlet exact = m.normalize_exact(&table).unwrap();\\nassert!(summary.empirical().l1_distance(&exact) < 0.03); // Exact expectations of the two properties are 2/3 and 1/2.\\nassert!((summary.expectations[0] - 2.0 / 3.0).abs() < 0.03);\\nassert!((summary.expectations[1] - 0.5).abs() < 0.03); // Determinism under a fixed seed.\\nlet again = run_chain(&m, &config).unwrap();\\nassert_eq!(summary, again); } Rejected steps copy the current dag into the sample — that is what makes\\nthe retained count independent of the acceptance rate, and it is exactly\\nthe mechanism that shifts mass away from dags the proposal over-serves.","breadcrumbs":"Sampling with Metropolis-Hastings » Running chains","id":"18","title":"Running chains"},"19":{"body":"Everything in the previous chapters is reachable from one binary, avfield,\\nover plain text formats. The worked example’s files ship in crates/core/fixtures/.","breadcrumbs":"The command line » The command line","id":"19","title":"The command line"},"2":{"body":"Parsing at this scale is enumeration filtered by terminal yield. The\\ncontext-free grammar gives the sentence a a two analyses; the\\nattribute-value grammar rejects mixed daughters outright: #![allow(unused)] fn main() {\\nuse avfield::fixtures::{av_grammar, cf_grammar};\\nuse avfield::grammar::parse_dags; assert_eq!(parse_dags(&cf_grammar(), &[\\"a\\", \\"a\\"], 10).len(), 2);\\nassert_eq!(parse_dags(&cf_grammar(), &[\\"a\\", \\"b\\"], 10).len(), 1);\\nassert_eq!(parse_dags(&av_grammar(), &[\\"a\\", \\"b\\"], 10).len(), 0); }","breadcrumbs":"Grammars and dags » Parsing","id":"2","title":"Parsing"},"20":{"body":"A grammar file ( # comments, quoted atoms, eq path equations): start S\\nrule 1: S -> A A | eq 1.1 = 2.1\\nrule 2: S -> B\\nrule 3: A -> \'a\'\\nrule 4: A -> \'b\'\\nrule 5: B -> \'a\' \'a\'\\nrule 6: B -> \'b\' \'b\' A corpus file, one <count> <bracketed tree> record per line: 4 (S (A a) (A a))\\n2 (S (A b) (A b))\\n3 (S (B a a))\\n3 (S (B b b)) A weights file is rule <id> <weight> per line; weights print as exact\\nfractions when the denominator stays below 10^6 and as 12-significant-digit\\ndecimals otherwise. Field models are JSON files carrying the grammar path,\\nthe initial mode and backbone weights, the property patterns and their\\nweights.","breadcrumbs":"The command line » File formats","id":"20","title":"File formats"},"21":{"body":"Estimate per-rule weights and see both divergences — the raw product view\\nand the view after normalizing over the constrained language: $ avfield estimate-erf --grammar twins_av.grammar --corpus twins.corpus\\n# seed 0\\nrule 1 1/2\\nrule 2 1/2\\nrule 3 2/3\\nrule 4 1/3\\nrule 5 1/2\\nrule 6 1/2\\n# divergence raw-products 0.318257\\n# divergence normalized 0.066943 (Z = 0.777777777778) Induce a field (model JSON plus a TSV trace of selected properties): $ avfield induce --grammar twins_av.grammar --corpus twins.corpus \\\\ --out induced.model --seed 7\\n$ cat induced.model.trace.tsv\\nstep\\tpattern\\tbeta\\tdivergence\\tmode\\n1\\t?\'a\'\\t1.400000000027e0\\t1.436259156415e-2\\texact\\n2\\t#B[1:\'a\']\\t8.095238095178e-1\\t8.389797312787e-3\\texact\\n3\\t#A\\t9.198662261399e-1\\t2.050705629557e-15\\texact Patterns in traces and summaries are canonical dag strings prefixed with\\nthe counting mode: ? for presence, # for embeddings. The first step\\npicks the presence of atom \'a\' at weight 7/5, exactly the hand\\ncomputation of chapter 4; two more properties take the divergence to\\nnumerical zero. Exit codes are part of the interface: 0 on success, 2 on input errors\\n(unreadable files, malformed corpus lines — with line numbers), 3 when\\nweight scaling hits its iteration cap (the partial model is still written),\\n4 when a sentence has no parse. Sample from a field model with a seeded chain; the retained sample comes\\nout in corpus format, followed by a JSON summary with acceptance rate,\\nproposal failures, per-property expectations and histograms: $ avfield sample --model twins_field.model --length 20000 --burn-in 1000 --seed 42\\n# seed 42\\n6781 (S (A a) (A a))\\n3334 (S (A b) (A b))\\n4889 (S (B a a))\\n4996 (S (B b b))\\n{ \\"counts\\": { \\"S[1:A[1:\'a\'],2:A[1:*2]]\\": 6781, ... }, \\"acceptanceRate\\": ..., \\"expectations\\": [...], \\"histograms\\": [...]\\n} The retained shares track the model distribution (1/3, 1/6, 1/4, 1/4), and\\nrerunning with the same seed reproduces the output byte for byte. Disambiguate a sentence (tokens may be run together when the atoms are\\nsingle characters): $ avfield disambiguate --grammar twins_cf.grammar --weights twins_cf.weights aa\\n# seed 0\\n(S (B a a))\\n# dag S[1:B[1:\'a\',2:\'a\']]\\n# unnormalized-weight 2.500000000000e-1\\n# parses 2 Report a model’s divergence against a corpus, list a language, or run every\\nestimator against its brute-force oracle: $ avfield kl --model twins_field.model --corpus twins.corpus\\n$ avfield enumerate --grammar twins_av.grammar --max-depth 10\\n$ avfield oracle-check oracle-check prints a TSV table, one double-computed quantity per row,\\nand fails (exit 2) if any row disagrees beyond its tolerance.","breadcrumbs":"The command line » Subcommands","id":"21","title":"Subcommands"},"3":{"body":"A stochastic context-free model attaches a weight to every rule, with the\\nweights of rules sharing a left-hand side summing to one. A tree’s\\nprobability is the product of the weights of the rules used in it. #![allow(unused)] fn main() {\\nuse avfield::fixtures::{cf_grammar, demo_model};\\nuse avfield::grammar::derivation_from_bracketed; let g = cf_grammar();\\nlet m = demo_model(); // weights (1/2, 1/2, 2/3, 1/3, 1/2, 1/2) let twin = derivation_from_bracketed(&g, \\"(S (A a) (A a))\\").unwrap();\\n// 1/2 * 2/3 * 2/3 = 2/9, and the fraction is tracked exactly.\\nassert_eq!(m.tree_probability_exact(&twin).unwrap().to_string(), \\"2/9\\"); let flat = derivation_from_bracketed(&g, \\"(S (B a a))\\").unwrap();\\nassert_eq!(m.tree_probability_exact(&flat).unwrap().to_string(), \\"1/4\\"); } Disambiguation picks the most probable analysis. Both trees above yield the\\nsentence a a, and since 1/4 beats 2/9 the flat analysis wins: #![allow(unused)] fn main() {\\nuse avfield::fixtures::{cf_grammar, demo_model};\\nuse avfield::grammar::parse_dags;\\nuse avfield::scfg::disambiguate; let g = cf_grammar();\\nlet parses: Vec<_> = parse_dags(&g, &[\\"a\\", \\"a\\"], 10).into_iter().map(|(_, d)| d).collect();\\nlet best = disambiguate(&demo_model(), &parses);\\nassert_eq!(best.bracketed(&g), \\"(S (B a a))\\"); }","breadcrumbs":"Weighted grammars and the ERF recipe » Weighted grammars and the ERF recipe","id":"3","title":"Weighted grammars and the ERF recipe"},"4":{"body":"Given a treebank, the expected-rule-frequency (ERF) recipe sets each weight\\nproportional to the rule’s average frequency in the corpus, normalized\\nwithin each left-hand-side group. The twelve-tree corpus used throughout\\nthis book has four tree types with relative frequencies 1/3, 1/6, 1/4, 1/4,\\nand its ERF estimate lands exactly on the demo weights: #![allow(unused)] fn main() {\\nuse avfield::fixtures::{cf_corpus, cf_grammar, demo_weights};\\nuse avfield::grammar::cf_analogue;\\nuse avfield::scfg::erf_estimate; let est = erf_estimate(&cf_analogue(&cf_grammar()), &cf_corpus()).unwrap();\\nfor (got, want) in est.theta().iter().zip(&demo_weights()) { assert_eq!(got.exact(), want.exact());\\n} }","breadcrumbs":"Weighted grammars and the ERF recipe » Estimating weights from a corpus","id":"4","title":"Estimating weights from a corpus"},"5":{"body":"Fit is measured by the Kullback-Leibler divergence of the model from the\\nempirical distribution: the average log ratio of empirical to model\\nprobability, weighted by the empirical mass. For the ERF weights on this\\ncorpus the divergence is about 0.32 nats; a blunter all-halves weighting is\\nworse at about 0.37: #![allow(unused)] fn main() {\\nuse avfield::fixtures::{cf_corpus, cf_grammar, demo_model};\\nuse avfield::field::empirical_from_corpus;\\nuse avfield::grammar::cf_analogue;\\nuse avfield::oracle::brute_force_kl;\\nuse avfield::scfg::CfModel;\\nuse avfield::weight::Weight; let corpus = cf_corpus();\\nlet p_tilde = empirical_from_corpus(&corpus); let q_demo: Vec<f64> = corpus.entries.iter() .map(|e| demo_model().tree_probability(&e.derivation)) .collect();\\nlet d_demo = brute_force_kl(&p_tilde.probs, &q_demo);\\nassert!((d_demo - 0.318).abs() < 0.005); let halves = CfModel::proper( cf_analogue(&cf_grammar()), vec![Weight::from_ratio(1, 2); 6],\\n).unwrap();\\nlet q_half: Vec<f64> = corpus.entries.iter() .map(|e| halves.tree_probability(&e.derivation)) .collect();\\nlet d_half = brute_force_kl(&p_tilde.probs, &q_half);\\nassert!(d_half > d_demo); } Note that even the best weights leave a residual divergence here. The\\ncorpus has a quirk: whenever a tree has two A daughters they rewrite the\\nsame way. No product of per-rule weights can express that coupling — the\\nmass assigned to the twin trees is inevitably shared with the mixed trees\\nthat use exactly the same rules. For a context-free generator that quirk is\\nsampling noise and ERF weights remain the best possible; the next chapter\\nis about what happens when it is not noise but grammar.","breadcrumbs":"Weighted grammars and the ERF recipe » Measuring fit","id":"5","title":"Measuring fit"},"6":{"body":"Suppose the twin dependency is not an accident of the sample but a hard\\nconstraint, as in the attribute-value grammar of chapter 1. Its language\\nhas exactly four dags, so nothing is hidden: the empirical distribution\\n(1/3, 1/6, 1/4, 1/4) lives on the whole language.","breadcrumbs":"Random fields » Random fields","id":"6","title":"Random fields"},"7":{"body":"One can still weight the six rules and multiply, but now the products over\\nthe four dags do not sum to one — there are no missing trees to carry the\\nleftover mass — so the weighting must be normalized over the language.\\nDoing that to the ERF weights gives the distribution\\n(2/7, 1/14, 9/28, 9/28), at divergence ≈ 0.07 from the corpus: #![allow(unused)] fn main() {\\nuse avfield::fixtures::{av_corpus, av_grammar, uniformizing_weights};\\nuse avfield::field::{big_ratio, empirical_from_corpus, kl_divergence, FieldModel, InitialMode};\\nuse avfield::grammar::cf_analogue;\\nuse avfield::induction::rule_local_tree_properties;\\nuse avfield::scfg::{erf_estimate, CfModel}; let g = av_grammar();\\nlet est = erf_estimate(&cf_analogue(&g), &av_corpus()).unwrap(); // A field whose properties are the six rule local trees reproduces\\n// per-rule weighting; Uniform mode normalizes the bare products.\\nlet field = FieldModel::new( g.clone(), est.clone(), InitialMode::Uniform, rule_local_tree_properties(&g), est.theta().to_vec(),\\n).unwrap();\\nlet table = field.language(10).unwrap();\\nlet q = field.normalize_exact(&table).unwrap(); let (_, z) = field.cached_z().unwrap();\\nassert_eq!(z.unwrap(), big_ratio(7, 9));\\nassert_eq!(q.exact.as_ref().unwrap()[0], big_ratio(2, 7));\\nassert_eq!(q.exact.as_ref().unwrap()[1], big_ratio(1, 14)); let d = kl_divergence(&empirical_from_corpus(&av_corpus()), &q).unwrap();\\nassert!((d - 0.067).abs() < 0.005); } The surprise is that 0.07 is not the best achievable. The optimality of\\nexpected-frequency weights silently assumed the tree probabilities sum to\\none as computed; re-apportioning mass through a normalizer breaks the\\nassumption. There are proper per-rule weights — involving √2 — whose\\nnormalized distribution reproduces the corpus exactly: #![allow(unused)] fn main() {\\nuse avfield::fixtures::{av_corpus, av_grammar, uniformizing_weights};\\nuse avfield::field::{empirical_from_corpus, kl_divergence, FieldModel, InitialMode};\\nuse avfield::grammar::cf_analogue;\\nuse avfield::induction::rule_local_tree_properties;\\nuse avfield::scfg::CfModel;\\nuse avfield::weight::Weight; let r2 = std::f64::consts::SQRT_2;\\nlet beta = vec![ Weight::from_f64((3.0 + 2.0 * r2) / (6.0 + 2.0 * r2)), Weight::from_f64(3.0 / (6.0 + 2.0 * r2)), Weight::from_f64(r2 / (1.0 + r2)), Weight::from_f64(1.0 / (1.0 + r2)), Weight::from_ratio(1, 2), Weight::from_ratio(1, 2),\\n];\\nlet g = av_grammar();\\nlet initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();\\nlet field = FieldModel::new( g.clone(), initial, InitialMode::Uniform, rule_local_tree_properties(&g), beta,\\n).unwrap();\\nlet table = field.language(10).unwrap();\\nlet q = field.normalize_exact(&table).unwrap();\\nlet p_tilde = empirical_from_corpus(&av_corpus());\\nfor (x, &p) in p_tilde.support.iter().zip(&p_tilde.probs) { assert!((q.probability_of(x).unwrap() - p).abs() < 1e-9);\\n}\\nassert!(kl_divergence(&p_tilde, &q).unwrap() < 1e-9); } So the frequency recipe does not converge to the right weights once the\\nlanguage is constrained: estimated this way, divergence 0.07 persists no\\nmatter how much data arrives, while weights reaching divergence 0 exist.","breadcrumbs":"Random fields » Per-rule weights stop being optimal","id":"7","title":"Per-rule weights stop being optimal"},"8":{"body":"A random field drops two requirements at once: weights need not sum to one\\nper left-hand side, and the weighted things — properties — need not be\\nrules at all. A property is a connected labelled subdag with a counting\\nmode, embeddings (how many label- and edge-preserving injective maps into\\nthe dag) or presence (capped at one). A dag’s field weight is the product\\nof property weights raised to their counts, and the distribution is the\\nnormalized field weight times an initial distribution. Two properties suffice where six rule weights failed: the A → a pattern\\n(which embeds twice in the shared-daughter dag, thanks to the\\nre-entrancy) and the bare B node. #![allow(unused)] fn main() {\\nuse avfield::fixtures::{av_corpus, av_grammar, uniformizing_weights};\\nuse avfield::field::{ count_property, empirical_from_corpus, kl_divergence, CountSemantics, FieldModel, InitialMode, Property,\\n};\\nuse avfield::grammar::{cf_analogue, Dag, NodeLabel};\\nuse avfield::scfg::CfModel;\\nuse avfield::weight::Weight; let shared = Property::new( Dag::build( vec![NodeLabel::Category(\\"A\\".into()), NodeLabel::Atom(\\"a\\".into())], vec![(0, \\"1\\".into(), 1)], 0, ).unwrap(), CountSemantics::Embeddings,\\n);\\nlet marker = Property::atom(NodeLabel::Category(\\"B\\".into()), CountSemantics::Embeddings); let g = av_grammar();\\nlet initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();\\nlet field = FieldModel::new( g, initial, InitialMode::Uniform, vec![shared.clone(), marker.clone()], vec![Weight::from_f64(std::f64::consts::SQRT_2), Weight::from_ratio(3, 2)],\\n).unwrap(); let table = field.language(10).unwrap();\\n// Counts over the four dags: (2,0,0,0) and (0,0,1,1).\\nlet f1: Vec<u64> = table.dags.iter().map(|x| count_property(&shared, x)).collect();\\nassert_eq!(f1, vec![2, 0, 0, 0]); // Field weights (2, 1, 3/2, 3/2) normalize to the corpus distribution.\\nlet q = field.normalize_exact(&table).unwrap();\\nassert!((q.z - 6.0).abs() < 1e-12);\\nlet p_tilde = empirical_from_corpus(&av_corpus());\\nassert!(kl_divergence(&p_tilde, &q).unwrap() < 1e-12); } The initial distribution deserves a word. Uniform mode treats every dag\\nof the (finite) language alike, so the field weight alone drives the\\ndistribution — that is the setting of the examples above. Scfg mode\\ninstead runs the context-free backbone as a stochastic generator, throws\\naway derivations that fail unification, and renormalizes; that is the mode\\nthe sampler of chapter 5 requires, and choosing backbone weights that make\\nthe surviving dags equally likely reconciles the two views.","breadcrumbs":"Random fields » Fields: arbitrary properties, not just rules","id":"8","title":"Fields: arbitrary properties, not just rules"},"9":{"body":"Choosing good properties by hand does not scale. Induction grows the field\\ngreedily from nothing: score every candidate property by how much\\ndivergence its best initial weight removes, add the winner, re-tune all\\nweights, repeat until no candidate helps.","breadcrumbs":"Field induction » Field induction","id":"9","title":"Field induction"}},"docInfo":{"0":{"body":242,"breadcrumbs":4,"title":2},"1":{"body":68,"breadcrumbs":4,"title":2},"10":{"body":106,"breadcrumbs":3,"title":1},"11":{"body":150,"breadcrumbs":4,"title":2},"12":{"body":120,"breadcrumbs":4,"title":2},"13":{"body":73,"breadcrumbs":4,"title":2},"14":{"body":37,"breadcrumbs":6,"title":3},"15":{"body":70,"breadcrumbs":4,"title":1},"16":{"body":140,"breadcrumbs":4,"title":1},"17":{"body":90,"breadcrumbs":6,"title":3},"18":{"body":145,"breadcrumbs":5,"title":2},"19":{"body":16,"breadcrumbs":4,"title":2},"2":{"body":39,"breadcrumbs":3,"title":1},"20":{"body":90,"breadcrumbs":4,"title":2},"21":{"body":298,"breadcrumbs":3,"title":1},"3":{"body":99,"breadcrumbs":8,"title":4},"4":{"body":61,"breadcrumbs":7,"title":3},"5":{"body":130,"breadcrumbs":6,"title":2},"6":{"body":27,"breadcrumbs":4,"title":2},"7":{"body":235,"breadcrumbs":8,"title":6},"8":{"body":212,"breadcrumbs":6,"title":4},"9":{"body":28,"breadcrumbs":4,"title":2}},"length":22},"lang":"English"}}'));
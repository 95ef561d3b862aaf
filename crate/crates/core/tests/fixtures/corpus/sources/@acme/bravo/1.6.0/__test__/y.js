aacme_bravo_1_6_0_x_1(); /* mid */ bacme_bravo_1_6_0_x_1();
    
    
const qacme_bravo_1_6_0_x_4 = "say \"hi\" // still a string";
callacme_bravo_1_6_0_x_5(); // trailing note acme_bravo_1_6_0_x_5
// comment acme_bravo_1_6_0_x_6
const racme_bravo_1_6_0_x_7 = a / b / c;

  /* x */  
const racme_bravo_1_6_0_x_10 = a / b / c;
const vacme_bravo_1_6_0_x_11 = 11;
const urlacme_bravo_1_6_0_x_12 = "http://example.com/*x";
/* start acme_bravo_1_6_0_x_13
end */ goacme_bravo_1_6_0_x_13();
  /* x */  
/*
 * block acme_bravo_1_6_0_x_15
 */
/* start acme_bravo_1_6_0_x_16
end */ goacme_bravo_1_6_0_x_16();
/* start acme_bravo_1_6_0_x_17
end */ goacme_bravo_1_6_0_x_17();
callacme_bravo_1_6_0_x_18(); // trailing note acme_bravo_1_6_0_x_18
let sacme_bravo_1_6_0_x_19 = 'a // b';
const vacme_bravo_1_6_0_x_20 = 20;
const qacme_bravo_1_6_0_x_21 = "say \"hi\" // still a string";
// comment acme_bravo_1_6_0_x_22
const vacme_bravo_1_6_0_x_23 = 23;
const vacme_bravo_1_6_0_x_24 = 24;
aacme_bravo_1_6_0_x_25(); /* mid */ bacme_bravo_1_6_0_x_25();
aacme_bravo_1_6_0_x_26(); /* mid */ bacme_bravo_1_6_0_x_26();
	// indented comment
const racme_bravo_1_6_0_x_28 = a / b / c;
aacme_bravo_1_6_0_x_29(); /* mid */ bacme_bravo_1_6_0_x_29();
aacme_bravo_1_6_0_x_32(); /* mid */ bacme_bravo_1_6_0_x_32();
let sacme_bravo_1_6_0_x_33 = 'a // b';
// end of file

const urldelta_2_0_1_x_1 = "http://example.com/*x";
const qdelta_2_0_1_x_2 = "say \"hi\" // still a string";
const urldelta_2_0_1_x_3 = "http://example.com/*x";
calldelta_2_0_1_x_4(); // trailing note delta_2_0_1_x_4
  /* x */  
const urldelta_2_0_1_x_6 = "http://example.com/*x";
// comment delta_2_0_1_x_7
const urldelta_2_0_1_x_8 = "http://example.com/*x";
adelta_2_0_1_x_9(); /* mid */ bdelta_2_0_1_x_9();
adelta_2_0_1_x_10(); /* mid */ bdelta_2_0_1_x_10();
// comment delta_2_0_1_x_11
function fdelta_2_0_1_x_12(x) {
  return x + 1;
}
/*
 * block delta_2_0_1_x_13
 */
  /* x */  
const qdelta_2_0_1_x_15 = "say \"hi\" // still a string";
let sdelta_2_0_1_x_16 = 'a // b';
const qdelta_2_0_1_x_17 = "say \"hi\" // still a string";
    
let sdelta_2_0_1_x_19 = 'a // b';
/** one-line doc delta_2_0_1_x_20 */
calldelta_2_0_1_x_21(); // trailing note delta_2_0_1_x_21
const qdelta_2_0_1_x_22 = "say \"hi\" // still a string";
const tdelta_2_0_1_x_23 = `line one
  /* not a comment */
`;
const vdelta_2_0_1_x_24 = 24;
const rdelta_2_0_1_x_25 = a / b / c;
const rdelta_2_0_1_x_26 = a / b / c;
let sdelta_2_0_1_x_27 = 'a // b';
/*
 * block delta_2_0_1_x_28
 */

const urldelta_2_0_1_x_30 = "http://example.com/*x";
// comment delta_2_0_1_x_31
/* start delta_2_0_1_x_32
end */ godelta_2_0_1_x_32();
const qdelta_2_0_1_x_33 = "say \"hi\" // still a string";
adelta_2_0_1_x_34(); /* mid */ bdelta_2_0_1_x_34();
function fdelta_2_0_1_x_35(x) {
  return x + 1;
}
/* start delta_2_0_1_x_36
end */ godelta_2_0_1_x_36();
	// indented comment
/* start delta_2_0_1_x_38
end */ godelta_2_0_1_x_38();
// end of file

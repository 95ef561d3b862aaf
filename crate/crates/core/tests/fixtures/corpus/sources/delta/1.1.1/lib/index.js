// comment delta_1_1_1_1
    
function fdelta_1_1_1_3(x) {
  return x + 1;
}
    
    
  /* x */  
const qdelta_1_1_1_7 = "say \"hi\" // still a string";
const rdelta_1_1_1_8 = a / b / c;
  /* x */  
calldelta_1_1_1_10(); // trailing note delta_1_1_1_10
	// indented comment
/*
 * block delta_1_1_1_12
 */
const vdelta_1_1_1_13 = 13;
adelta_1_1_1_14(); /* mid */ bdelta_1_1_1_14();
const urldelta_1_1_1_15 = "http://example.com/*x";
/** one-line doc delta_1_1_1_16 */
function fdelta_1_1_1_17(x) {
  return x + 1;
}
const qdelta_1_1_1_18 = "say \"hi\" // still a string";
	// indented comment
const urldelta_1_1_1_20 = "http://example.com/*x";
let sdelta_1_1_1_21 = 'a // b';
calldelta_1_1_1_22(); // trailing note delta_1_1_1_22
function fdelta_1_1_1_23(x) {
  return x + 1;
}
const qdelta_1_1_1_24 = "say \"hi\" // still a string";
  /* x */  
  /* x */  
const vdelta_1_1_1_27 = 27;
adelta_1_1_1_28(); /* mid */ bdelta_1_1_1_28();
	// indented comment

function fdelta_1_1_1_31(x) {
  return x + 1;
}
    
let sdelta_1_1_1_33 = 'a // b';
adelta_1_1_1_34(); /* mid */ bdelta_1_1_1_34();
/** one-line doc delta_1_1_1_35 */
const qdelta_1_1_1_36 = "say \"hi\" // still a string";
	// indented comment
let sdelta_1_1_1_38 = 'a // b';
adelta_1_1_1_39(); /* mid */ bdelta_1_1_1_39();
calldelta_1_1_1_40(); // trailing note delta_1_1_1_40
// end of file

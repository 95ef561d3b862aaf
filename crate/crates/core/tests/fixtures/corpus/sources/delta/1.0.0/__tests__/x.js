const tdelta_1_0_0_x_1 = `line one
  /* not a comment */
`;
const vdelta_1_0_0_x_2 = 2;
const qdelta_1_0_0_x_3 = "say \"hi\" // still a string";

adelta_1_0_0_x_5(); /* mid */ bdelta_1_0_0_x_5();
let sdelta_1_0_0_x_6 = 'a // b';
calldelta_1_0_0_x_7(); // trailing note delta_1_0_0_x_7
const urldelta_1_0_0_x_8 = "http://example.com/*x";
    

function fdelta_1_0_0_x_11(x) {
  return x + 1;
}
const tdelta_1_0_0_x_12 = `line one
  /* not a comment */
`;
const urldelta_1_0_0_x_13 = "http://example.com/*x";
const qdelta_1_0_0_x_14 = "say \"hi\" // still a string";
    
/** one-line doc delta_1_0_0_x_16 */
    
function fdelta_1_0_0_x_18(x) {
  return x + 1;
}
calldelta_1_0_0_x_19(); // trailing note delta_1_0_0_x_19
// comment delta_1_0_0_x_20
const tdelta_1_0_0_x_21 = `line one
  /* not a comment */
`;
const qdelta_1_0_0_x_22 = "say \"hi\" // still a string";
let sdelta_1_0_0_x_23 = 'a // b';
calldelta_1_0_0_x_24(); // trailing note delta_1_0_0_x_24
calldelta_1_0_0_x_25(); // trailing note delta_1_0_0_x_25
function fdelta_1_0_0_x_26(x) {
  return x + 1;
}
adelta_1_0_0_x_27(); /* mid */ bdelta_1_0_0_x_27();
const vdelta_1_0_0_x_28 = 28;
let sdelta_1_0_0_x_29 = 'a // b';
const qdelta_1_0_0_x_30 = "say \"hi\" // still a string";
const qdelta_1_0_0_x_32 = "say \"hi\" // still a string";
// end of file

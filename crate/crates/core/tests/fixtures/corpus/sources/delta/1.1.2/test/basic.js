function fdelta_1_1_2_x_1(x) {
  return x + 1;
}
  /* x */  
calldelta_1_1_2_x_3(); // trailing note delta_1_1_2_x_3
const rdelta_1_1_2_x_4 = a / b / c;

const tdelta_1_1_2_x_6 = `line one
  /* not a comment */
`;
    

// comment delta_1_1_2_x_9
const tdelta_1_1_2_x_10 = `line one
  /* not a comment */
`;
  /* x */  
calldelta_1_1_2_x_12(); // trailing note delta_1_1_2_x_12
const vdelta_1_1_2_x_13 = 13;
let sdelta_1_1_2_x_14 = 'a // b';
const tdelta_1_1_2_x_15 = `line one
  /* not a comment */
`;
const rdelta_1_1_2_x_16 = a / b / c;
    
const urldelta_1_1_2_x_18 = "http://example.com/*x";
/** one-line doc delta_1_1_2_x_19 */
/*
 * block delta_1_1_2_x_20
 */
calldelta_1_1_2_x_21(); // trailing note delta_1_1_2_x_21
/** one-line doc delta_1_1_2_x_22 */
const urldelta_1_1_2_x_23 = "http://example.com/*x";
adelta_1_1_2_x_24(); /* mid */ bdelta_1_1_2_x_24();
adelta_1_1_2_x_25(); /* mid */ bdelta_1_1_2_x_25();
/*
 * block delta_1_1_2_x_26
 */
const rdelta_1_1_2_x_27 = a / b / c;
// comment delta_1_1_2_x_28
/** one-line doc delta_1_1_2_x_29 */
let sdelta_1_1_2_x_30 = 'a // b';
adelta_1_1_2_x_31(); /* mid */ bdelta_1_1_2_x_31();
/* start delta_1_1_2_x_32
end */ godelta_1_1_2_x_32();
    
const vdelta_1_1_2_x_34 = 34;
const qdelta_1_1_2_x_35 = "say \"hi\" // still a string";
/*
 * block delta_1_1_2_x_36
 */
let sdelta_1_1_2_x_37 = 'a // b';
const rdelta_1_1_2_x_38 = a / b / c;
    

/*
 * block delta_1_1_2_x_41
 */
const vdelta_1_1_2_x_42 = 42;
function fdelta_1_1_2_x_43(x) {
  return x + 1;
}
calldelta_1_1_2_x_44(); // trailing note delta_1_1_2_x_44
// end of file

function fdelta_2_0_1_x_1(x) {
  return x + 1;
}
const urldelta_2_0_1_x_2 = "http://example.com/*x";
    
/*
 * block delta_2_0_1_x_4
 */
const tdelta_2_0_1_x_5 = `line one
  /* not a comment */
`;
	// indented comment
const tdelta_2_0_1_x_7 = `line one
  /* not a comment */
`;
function fdelta_2_0_1_x_8(x) {
  return x + 1;
}
calldelta_2_0_1_x_9(); // trailing note delta_2_0_1_x_9
/* start delta_2_0_1_x_10
end */ godelta_2_0_1_x_10();
/* start delta_2_0_1_x_11
end */ godelta_2_0_1_x_11();
let sdelta_2_0_1_x_12 = 'a // b';
const rdelta_2_0_1_x_13 = a / b / c;
    
/** one-line doc delta_2_0_1_x_15 */
	// indented comment
const vdelta_2_0_1_x_17 = 17;
function fdelta_2_0_1_x_18(x) {
  return x + 1;
}
/* start delta_2_0_1_x_19
end */ godelta_2_0_1_x_19();
const qdelta_2_0_1_x_20 = "say \"hi\" // still a string";
const vdelta_2_0_1_x_21 = 21;
// comment delta_2_0_1_x_22
const urldelta_2_0_1_x_23 = "http://example.com/*x";
/*
 * block delta_2_0_1_x_24
 */
const rdelta_2_0_1_x_25 = a / b / c;
const rdelta_2_0_1_x_26 = a / b / c;
function fdelta_2_0_1_x_27(x) {
  return x + 1;
}
adelta_2_0_1_x_28(); /* mid */ bdelta_2_0_1_x_28();
let sdelta_2_0_1_x_29 = 'a // b';

const tdelta_2_0_1_x_31 = `line one
  /* not a comment */
`;
const vdelta_2_0_1_x_32 = 32;
const qdelta_2_0_1_x_33 = "say \"hi\" // still a string";
adelta_2_0_1_x_34(); /* mid */ bdelta_2_0_1_x_34();
const vdelta_2_0_1_x_35 = 35;
// end of file

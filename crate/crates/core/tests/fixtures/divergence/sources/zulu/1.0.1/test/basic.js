/*
 * block zulu_1_0_1_x_1
 */
callzulu_1_0_1_x_2(); // trailing note zulu_1_0_1_x_2
const rzulu_1_0_1_x_3 = a / b / c;
callzulu_1_0_1_x_4(); // trailing note zulu_1_0_1_x_4
  /* x */  
const urlzulu_1_0_1_x_6 = "http://example.com/*x";
/* start zulu_1_0_1_x_7
end */ gozulu_1_0_1_x_7();
const urlzulu_1_0_1_x_8 = "http://example.com/*x";
  /* x */  
const vzulu_1_0_1_x_10 = 10;
azulu_1_0_1_x_11(); /* mid */ bzulu_1_0_1_x_11();
const tzulu_1_0_1_x_12 = `line one
  /* not a comment */
`;
/** one-line doc zulu_1_0_1_x_13 */

  /* x */  
/* start zulu_1_0_1_x_16
end */ gozulu_1_0_1_x_16();
// comment zulu_1_0_1_x_17
/** one-line doc zulu_1_0_1_x_18 */
const qzulu_1_0_1_x_19 = "say \"hi\" // still a string";
	// indented comment


const urlzulu_1_0_1_x_23 = "http://example.com/*x";
/*
 * block zulu_1_0_1_x_24
 */
const vzulu_1_0_1_x_25 = 25;
callzulu_1_0_1_x_26(); // trailing note zulu_1_0_1_x_26
const qzulu_1_0_1_x_27 = "say \"hi\" // still a string";
azulu_1_0_1_x_28(); /* mid */ bzulu_1_0_1_x_28();
/*
 * block zulu_1_0_1_x_29
 */
const tzulu_1_0_1_x_30 = `line one
  /* not a comment */
`;
  /* x */  
const qzulu_1_0_1_x_32 = "say \"hi\" // still a string";
  /* x */  
	// indented comment
let szulu_1_0_1_x_35 = 'a // b';
// comment zulu_1_0_1_x_36
/* start zulu_1_0_1_x_37
end */ gozulu_1_0_1_x_37();
/* start zulu_1_0_1_x_38
end */ gozulu_1_0_1_x_38();
azulu_1_0_1_x_39(); /* mid */ bzulu_1_0_1_x_39();
const rzulu_1_0_1_x_40 = a / b / c;
azulu_1_0_1_x_41(); /* mid */ bzulu_1_0_1_x_41();
  /* x */  
	// indented comment
/*
 * block zulu_1_0_1_x_44
 */
callzulu_1_0_1_x_45(); // trailing note zulu_1_0_1_x_45
let szulu_1_0_1_x_46 = 'a // b';
	// indented comment
    
azulu_1_0_1_x_49(); /* mid */ bzulu_1_0_1_x_49();
	// indented comment
	// indented comment
  /* x */  
	// indented comment
/* start zulu_1_0_1_x_56
end */ gozulu_1_0_1_x_56();
// end of file

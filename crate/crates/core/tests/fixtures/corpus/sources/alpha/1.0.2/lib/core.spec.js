const qalpha_1_0_2_x_1 = "say \"hi\" // still a string";
aalpha_1_0_2_x_2(); /* mid */ balpha_1_0_2_x_2();
/* start alpha_1_0_2_x_3
end */ goalpha_1_0_2_x_3();
function falpha_1_0_2_x_4(x) {
  return x + 1;
}
/* start alpha_1_0_2_x_5
end */ goalpha_1_0_2_x_5();
	// indented comment

  /* x */  
	// indented comment
const ralpha_1_0_2_x_10 = a / b / c;
// comment alpha_1_0_2_x_11
  /* x */  
/** one-line doc alpha_1_0_2_x_13 */
	// indented comment
/* start alpha_1_0_2_x_15
end */ goalpha_1_0_2_x_15();
let salpha_1_0_2_x_16 = 'a // b';
/* start alpha_1_0_2_x_17
end */ goalpha_1_0_2_x_17();
aalpha_1_0_2_x_18(); /* mid */ balpha_1_0_2_x_18();
    
callalpha_1_0_2_x_20(); // trailing note alpha_1_0_2_x_20
// comment alpha_1_0_2_x_22
const urlalpha_1_0_2_x_23 = "http://example.com/*x";
const qalpha_1_0_2_x_24 = "say \"hi\" // still a string";
// end of file

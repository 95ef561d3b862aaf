callecho_1_2_0_beta_1_x_1(); // trailing note echo_1_2_0_beta_1_x_1
const urlecho_1_2_0_beta_1_x_2 = "http://example.com/*x";
	// indented comment
/** one-line doc echo_1_2_0_beta_1_x_4 */
// comment echo_1_2_0_beta_1_x_5
    
const qecho_1_2_0_beta_1_x_7 = "say \"hi\" // still a string";
const qecho_1_2_0_beta_1_x_8 = "say \"hi\" // still a string";
/*
 * block echo_1_2_0_beta_1_x_9
 */
aecho_1_2_0_beta_1_x_10(); /* mid */ becho_1_2_0_beta_1_x_10();
    
    
callecho_1_2_0_beta_1_x_13(); // trailing note echo_1_2_0_beta_1_x_13
/*
 * block echo_1_2_0_beta_1_x_14
 */
	// indented comment

const qecho_1_2_0_beta_1_x_17 = "say \"hi\" // still a string";
  /* x */  
const techo_1_2_0_beta_1_x_19 = `line one
  /* not a comment */
`;
const urlecho_1_2_0_beta_1_x_20 = "http://example.com/*x";
/* start echo_1_2_0_beta_1_x_21
end */ goecho_1_2_0_beta_1_x_21();

const vecho_1_2_0_beta_1_x_23 = 23;
const recho_1_2_0_beta_1_x_24 = a / b / c;
// end of file

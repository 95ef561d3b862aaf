/* start charlie_2_0_0_experimental_3_x_1
end */ gocharlie_2_0_0_experimental_3_x_1();
const vcharlie_2_0_0_experimental_3_x_2 = 2;
const tcharlie_2_0_0_experimental_3_x_3 = `line one
  /* not a comment */
`;
	// indented comment
let scharlie_2_0_0_experimental_3_x_5 = 'a // b';
/* start charlie_2_0_0_experimental_3_x_6
end */ gocharlie_2_0_0_experimental_3_x_6();
const vcharlie_2_0_0_experimental_3_x_7 = 7;

callcharlie_2_0_0_experimental_3_x_9(); // trailing note charlie_2_0_0_experimental_3_x_9
  /* x */  
const rcharlie_2_0_0_experimental_3_x_11 = a / b / c;
// end of file

  /* x */  
/* start charlie_1_1_0_x_2
end */ gocharlie_1_1_0_x_2();
/* start charlie_1_1_0_x_3
end */ gocharlie_1_1_0_x_3();
/* start charlie_1_1_0_x_4
end */ gocharlie_1_1_0_x_4();
    
let scharlie_1_1_0_x_6 = 'a // b';
const rcharlie_1_1_0_x_7 = a / b / c;
/* start charlie_1_1_0_x_8
end */ gocharlie_1_1_0_x_8();
/** one-line doc charlie_1_1_0_x_9 */
	// indented comment
/** one-line doc charlie_1_1_0_x_12 */


const urlcharlie_1_1_0_x_15 = "http://example.com/*x";
// end of file

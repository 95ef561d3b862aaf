	// indented comment
const qcharlie_1_2_0_x_2 = "say \"hi\" // still a string";
// comment charlie_1_2_0_x_3
acharlie_1_2_0_x_4(); /* mid */ bcharlie_1_2_0_x_4();
	// indented comment
	// indented comment
	// indented comment
const tcharlie_1_2_0_x_8 = `line one
  /* not a comment */
`;
callcharlie_1_2_0_x_9(); // trailing note charlie_1_2_0_x_9
/** one-line doc charlie_1_2_0_x_10 */
const urlcharlie_1_2_0_x_11 = "http://example.com/*x";
const vcharlie_1_2_0_x_12 = 12;
/** one-line doc charlie_1_2_0_x_13 */
/*
 * block charlie_1_2_0_x_14
 */
const qcharlie_1_2_0_x_15 = "say \"hi\" // still a string";
const tcharlie_1_2_0_x_16 = `line one
  /* not a comment */
`;
const rcharlie_1_2_0_x_17 = a / b / c;
/*
 * block charlie_1_2_0_x_18
 */
let scharlie_1_2_0_x_19 = 'a // b';
// comment charlie_1_2_0_x_20

function fcharlie_1_2_0_x_22(x) {
  return x + 1;
}
// comment charlie_1_2_0_x_23
acharlie_1_2_0_x_24(); /* mid */ bcharlie_1_2_0_x_24();
/* start charlie_1_2_0_x_25
end */ gocharlie_1_2_0_x_25();
const urlcharlie_1_2_0_x_26 = "http://example.com/*x";
const qcharlie_1_2_0_x_27 = "say \"hi\" // still a string";
const vcharlie_1_2_0_x_28 = 28;
/* start charlie_1_2_0_x_29
end */ gocharlie_1_2_0_x_29();
    
const rcharlie_1_2_0_x_31 = a / b / c;
    
// comment charlie_1_2_0_x_33
// comment charlie_1_2_0_x_34
/* start charlie_1_2_0_x_35
end */ gocharlie_1_2_0_x_35();

// comment charlie_1_2_0_x_37
const tcharlie_1_2_0_x_38 = `line one
  /* not a comment */
`;
    
/*
 * block charlie_1_2_0_x_40
 */
const rcharlie_1_2_0_x_41 = a / b / c;
const urlcharlie_1_2_0_x_42 = "http://example.com/*x";
/** one-line doc charlie_1_2_0_x_43 */
callcharlie_1_2_0_x_44(); // trailing note charlie_1_2_0_x_44
// end of file

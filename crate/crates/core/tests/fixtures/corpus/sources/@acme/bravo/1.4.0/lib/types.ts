const tacme_bravo_1_4_0_x_1 = `line one
  /* not a comment */
`;
/*
 * block acme_bravo_1_4_0_x_2
 */
callacme_bravo_1_4_0_x_3(); // trailing note acme_bravo_1_4_0_x_3
    
let sacme_bravo_1_4_0_x_5 = 'a // b';
let sacme_bravo_1_4_0_x_6 = 'a // b';

const tacme_bravo_1_4_0_x_8 = `line one
  /* not a comment */
`;
let sacme_bravo_1_4_0_x_9 = 'a // b';
    
const racme_bravo_1_4_0_x_11 = a / b / c;
  /* x */  
  /* x */  
    
// comment acme_bravo_1_4_0_x_15

const racme_bravo_1_4_0_x_17 = a / b / c;
/* start acme_bravo_1_4_0_x_18
end */ goacme_bravo_1_4_0_x_18();
	// indented comment
/** one-line doc acme_bravo_1_4_0_x_20 */
// comment acme_bravo_1_4_0_x_22
const racme_bravo_1_4_0_x_23 = a / b / c;
// end of file

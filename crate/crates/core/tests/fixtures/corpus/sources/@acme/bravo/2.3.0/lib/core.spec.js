    
const urlacme_bravo_2_3_0_x_2 = "http://example.com/*x";

/* start acme_bravo_2_3_0_x_4
end */ goacme_bravo_2_3_0_x_4();
function facme_bravo_2_3_0_x_5(x) {
  return x + 1;
}
const tacme_bravo_2_3_0_x_6 = `line one
  /* not a comment */
`;
/* start acme_bravo_2_3_0_x_7
end */ goacme_bravo_2_3_0_x_7();
const tacme_bravo_2_3_0_x_8 = `line one
  /* not a comment */
`;
const tacme_bravo_2_3_0_x_9 = `line one
  /* not a comment */
`;
// comment acme_bravo_2_3_0_x_10
    
/*
 * block acme_bravo_2_3_0_x_12
 */

const urlacme_bravo_2_3_0_x_14 = "http://example.com/*x";
// comment acme_bravo_2_3_0_x_15
const racme_bravo_2_3_0_x_16 = a / b / c;

let sacme_bravo_2_3_0_x_18 = 'a // b';
// comment acme_bravo_2_3_0_x_19
// comment acme_bravo_2_3_0_x_20
/* start acme_bravo_2_3_0_x_21
end */ goacme_bravo_2_3_0_x_21();
/** one-line doc acme_bravo_2_3_0_x_25 */
/*
 * block acme_bravo_2_3_0_x_26
 */
	// indented comment

// comment acme_bravo_2_3_0_x_30
/* start acme_bravo_2_3_0_x_31
end */ goacme_bravo_2_3_0_x_31();
// end of file

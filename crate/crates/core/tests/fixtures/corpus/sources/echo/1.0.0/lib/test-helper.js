const urlecho_1_0_0_x_1 = "http://example.com/*x";
const urlecho_1_0_0_x_2 = "http://example.com/*x";
  /* x */  
/*
 * block echo_1_0_0_x_4
 */

/*
 * block echo_1_0_0_x_6
 */
aecho_1_0_0_x_7(); /* mid */ becho_1_0_0_x_7();
function fecho_1_0_0_x_8(x) {
  return x + 1;
}
const qecho_1_0_0_x_9 = "say \"hi\" // still a string";
let secho_1_0_0_x_10 = 'a // b';
let secho_1_0_0_x_11 = 'a // b';
aecho_1_0_0_x_12(); /* mid */ becho_1_0_0_x_12();
let secho_1_0_0_x_13 = 'a // b';
  /* x */  
/** one-line doc echo_1_0_0_x_15 */
/* start echo_1_0_0_x_16
end */ goecho_1_0_0_x_16();
// end of file

const techo_1_1_0_x_1 = `line one
  /* not a comment */
`;

aecho_1_1_0_x_3(); /* mid */ becho_1_1_0_x_3();
/** one-line doc echo_1_1_0_x_4 */
function fecho_1_1_0_x_5(x) {
  return x + 1;
}
const vecho_1_1_0_x_6 = 6;
const vecho_1_1_0_x_7 = 7;
aecho_1_1_0_x_8(); /* mid */ becho_1_1_0_x_8();
const recho_1_1_0_x_9 = a / b / c;

    
const urlecho_1_1_0_x_12 = "http://example.com/*x";
// comment echo_1_1_0_x_13
/* start echo_1_1_0_x_14
end */ goecho_1_1_0_x_14();
const qecho_1_1_0_x_15 = "say \"hi\" // still a string";
let secho_1_1_0_x_16 = 'a // b';
    
callecho_1_1_0_x_18(); // trailing note echo_1_1_0_x_18
const qecho_1_1_0_x_19 = "say \"hi\" // still a string";
  /* x */  
/*
 * block echo_1_1_0_x_21
 */
  /* x */  
const qecho_1_1_0_x_23 = "say \"hi\" // still a string";
const qecho_1_1_0_x_24 = "say \"hi\" // still a string";
/* start echo_1_1_0_x_25
end */ goecho_1_1_0_x_25();
const recho_1_1_0_x_26 = a / b / c;
callecho_1_1_0_x_27(); // trailing note echo_1_1_0_x_27
function fecho_1_1_0_x_28(x) {
  return x + 1;
}
// comment echo_1_1_0_x_29
const vecho_1_1_0_x_30 = 30;
aecho_1_1_0_x_31(); /* mid */ becho_1_1_0_x_31();
const vecho_1_1_0_x_32 = 32;
// end of file

adelta_2_0_0_x_1(); /* mid */ bdelta_2_0_0_x_1();
/* start delta_2_0_0_x_2
end */ godelta_2_0_0_x_2();
const qdelta_2_0_0_x_3 = "say \"hi\" // still a string";
function fdelta_2_0_0_x_4(x) {
  return x + 1;
}
function fdelta_2_0_0_x_5(x) {
  return x + 1;
}
/** one-line doc delta_2_0_0_x_6 */
const rdelta_2_0_0_x_7 = a / b / c;
adelta_2_0_0_x_8(); /* mid */ bdelta_2_0_0_x_8();


/** one-line doc delta_2_0_0_x_11 */
/* start delta_2_0_0_x_12
end */ godelta_2_0_0_x_12();
// end of file

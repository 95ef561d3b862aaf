const vecho_2_0_0_1 = 1;

	// indented comment
/* start echo_2_0_0_4
end */ goecho_2_0_0_4();

const recho_2_0_0_6 = a / b / c;
	// indented comment
	// indented comment
callecho_2_0_0_9(); // trailing note echo_2_0_0_9
// comment echo_2_0_0_10
    
	// indented comment
let secho_2_0_0_13 = 'a // b';
    
const techo_2_0_0_15 = `line one
  /* not a comment */
`;
const recho_2_0_0_16 = a / b / c;
    
function fecho_2_0_0_18(x) {
  return x + 1;
}
    
const techo_2_0_0_20 = `line one
  /* not a comment */
`;
callecho_2_0_0_21(); // trailing note echo_2_0_0_21
const qecho_2_0_0_22 = "say \"hi\" // still a string";
// comment echo_2_0_0_23
function fecho_2_0_0_24(x) {
  return x + 1;
}
  /* x */  
  /* x */  
const vecho_2_0_0_27 = 27;
    
const techo_2_0_0_29 = `line one
  /* not a comment */
`;
callecho_2_0_0_30(); // trailing note echo_2_0_0_30
const recho_2_0_0_31 = a / b / c;
/* start echo_2_0_0_32
end */ goecho_2_0_0_32();
callecho_2_0_0_33(); // trailing note echo_2_0_0_33
    
const qecho_2_0_0_35 = "say \"hi\" // still a string";
// comment echo_2_0_0_36
const qecho_2_0_0_37 = "say \"hi\" // still a string";
const urlecho_2_0_0_38 = "http://example.com/*x";
	// indented comment
// comment echo_2_0_0_40
    
// comment echo_2_0_0_42
/** one-line doc echo_2_0_0_43 */
// comment echo_2_0_0_44
	// indented comment
// comment echo_2_0_0_46
	// indented comment
    
  /* x */  
let secho_2_0_0_50 = 'a // b';
    
	// indented comment
/** one-line doc echo_2_0_0_53 */
/*
 * block echo_2_0_0_54
 */
// comment echo_2_0_0_55

function fecho_2_0_0_57(x) {
  return x + 1;
}
const techo_2_0_0_58 = `line one
  /* not a comment */
`;
callecho_2_0_0_59(); // trailing note echo_2_0_0_59
const urlecho_2_0_0_60 = "http://example.com/*x";
function fecho_2_0_0_61(x) {
  return x + 1;
}
/*
 * block echo_2_0_0_62
 */
const urlecho_2_0_0_63 = "http://example.com/*x";
const recho_2_0_0_64 = a / b / c;
// comment echo_2_0_0_65

  /* x */  
const vecho_2_0_0_68 = 68;
// comment echo_2_0_0_69
/*
 * block echo_2_0_0_70
 */
  /* x */  
// comment echo_2_0_0_72
    
function fecho_2_0_0_74(x) {
  return x + 1;
}
	// indented comment
    
/*
 * block echo_2_0_0_77
 */
let secho_2_0_0_78 = 'a // b';
    
const recho_2_0_0_80 = a / b / c;
aecho_2_0_0_81(); /* mid */ becho_2_0_0_81();
// comment echo_2_0_0_82
/** one-line doc echo_2_0_0_83 */
/** one-line doc echo_2_0_0_84 */
// comment echo_2_0_0_85
	// indented comment
const vecho_2_0_0_87 = 87;
    
const techo_2_0_0_89 = `line one
  /* not a comment */
`;

aecho_2_0_0_91(); /* mid */ becho_2_0_0_91();
const vecho_2_0_0_92 = 92;
/*
 * block echo_2_0_0_93
 */
aecho_2_0_0_94(); /* mid */ becho_2_0_0_94();
/* start echo_2_0_0_95
end */ goecho_2_0_0_95();
function fecho_2_0_0_96(x) {
  return x + 1;
}
let secho_2_0_0_97 = 'a // b';
/*
 * block echo_2_0_0_98
 */
const vecho_2_0_0_99 = 2;
/** one-line doc echo_2_0_0_100 */
	// indented comment
	// indented comment
let secho_2_0_0_103 = 'a // b';
  /* x */  
  /* x */  
/* start echo_2_0_0_106
end */ goecho_2_0_0_106();
/*
 * block echo_2_0_0_107
 */
const techo_2_0_0_108 = `line one
  /* not a comment */
`;
let secho_2_0_0_109 = 'a // b';
let secho_2_0_0_110 = 'a // b';
  /* x */  
/*
 * block echo_2_0_0_114
 */
/* start echo_2_0_0_115
end */ goecho_2_0_0_115();

	// indented comment
aecho_2_0_0_118(); /* mid */ becho_2_0_0_118();
// end of file

// Taylor coefficients of the Riemann-Siegel remainder functions C0..C4 in
// z = 2p - 1, where p is the fractional part of sqrt(t / 2pi). C0, C2, C4 are
// even in z and list the coefficients of z^0, z^2, ...; C1 and C3 are odd and
// list the coefficients of z^1, z^3, .... Generated by exact power-series
// division of cos(2pi(p^2 - p - 1/16)) / cos(2pi p) at 60 digits.

pub(crate) const C0: [f64; 22] = [
    0.3826834323650898,
    0.43724046807752043,
    0.1323765754803435,
    -0.013605026047674188,
    -0.013567621970103581,
    -0.0016237253231444653,
    0.0002970535373337969,
    7.94330087952147e-05,
    4.6556124614504504e-07,
    -1.4327251630955106e-06,
    -1.0354847112312946e-07,
    1.2357927083861738e-08,
    1.7881083857954906e-09,
    -3.391414389927036e-11,
    -1.6326633902565907e-11,
    -3.7851093185412205e-13,
    9.327423259201725e-14,
    5.221843015978137e-15,
    -3.350673072744264e-16,
    -3.4124265228117265e-17,
    5.751203341432399e-19,
    1.4895301363211506e-19,
];

pub(crate) const C1: [f64; 23] = [
    -0.026825102628375348,
    0.013784773426351853,
    0.03849125048223508,
    0.009871066299062077,
    -0.0033107597608584044,
    -0.0014647808577954152,
    -1.3207940624876963e-05,
    5.9227487018471416e-05,
    5.980242585373449e-06,
    -9.641322456169826e-07,
    -1.8334733722714413e-07,
    4.4670875627178334e-09,
    2.7096350821772744e-09,
    7.785288654315851e-11,
    -2.343762601089369e-11,
    -1.5830172789987521e-12,
    1.211994157372379e-13,
    1.4583781161108306e-14,
    -2.878630525813192e-16,
    -8.662862902123724e-17,
    -8.430722727137041e-19,
    3.6308072230973464e-19,
    1.1626698212838296e-20,
];

pub(crate) const C2: [f64; 53] = [
    0.005188542830293168,
    0.00030946583880634744,
    -0.011335941078229373,
    0.0022330457419581446,
    0.00519663740886233,
    0.0003439914407620834,
    -0.0005910648427470583,
    -0.00010229972547935857,
    2.0888392216992754e-05,
    5.927665493096536e-06,
    -1.6423838362436276e-07,
    -1.5161199700940684e-07,
    -5.907803698206668e-09,
    2.0911514859478188e-09,
    1.781564958329235e-10,
    -1.6164072455353832e-11,
    -2.3806962496667617e-12,
    5.398265295542595e-14,
    1.9750142196969516e-14,
    2.3332868732882633e-16,
    -1.118751761004808e-16,
    -4.164009488883767e-18,
    4.446081109291883e-19,
    2.8546114783637145e-20,
    -1.1913231430037894e-21,
    -1.29816343607365e-22,
    1.6123763178032786e-24,
    4.382497519884992e-25,
    2.7186389565003663e-27,
    -1.145889656313036e-27,
    -2.4415345500150693e-29,
    2.3504358727027688e-30,
    8.606183427662484e-32,
    -6.730432863906157e-33,
    -1.4475343984881877e-32,
    -6.730480974851124e-32,
    -3.1632032571748514e-31,
    -1.4803014291262827e-30,
    -6.899762669284348e-30,
    -3.2038058032357994e-29,
    -1.482267082816929e-28,
    -6.834228584862784e-28,
    -3.1406867478848216e-27,
    -1.4387868151103055e-26,
    -6.571512102044808e-26,
    -2.9928683957514595e-25,
    -1.359302754494669e-24,
    -6.157445497005911e-24,
    -2.782193111047455e-23,
    -1.2540649004668586e-22,
    -5.639491813220848e-22,
    -2.5303811667757533e-21,
    -1.132907767056813e-20,
];

pub(crate) const C3: [f64; 51] = [
    -0.0013397160907194568,
    0.003744215136379394,
    -0.0013303178919321468,
    -0.0022654660765471786,
    0.0009548499998506731,
    0.0006010038458963604,
    -0.00010128858286776622,
    -6.865733449299826e-05,
    5.985366791538599e-07,
    3.331659851239947e-06,
    2.1919289102435082e-07,
    -7.890884245681494e-08,
    -9.414685081295262e-09,
    9.57011621088348e-10,
    1.8763137453470662e-10,
    -4.4378376793233995e-12,
    -2.242673850561735e-12,
    -3.6276868657352434e-14,
    1.7639809550821582e-14,
    7.960765246786778e-16,
    -9.419651490589691e-17,
    -7.133103854569658e-18,
    3.2899105845546245e-19,
    4.1807303748984594e-20,
    -5.550542071646156e-22,
    -1.7870441906250273e-22,
    -1.3312803959248495e-24,
    5.818610640455872e-25,
    1.401905187490527e-26,
    -1.4640479501913302e-27,
    -5.978948117475588e-29,
    5.129667845047842e-30,
    1.224799183493774e-29,
    6.221587796952472e-29,
    3.185768997418973e-28,
    1.6204493885077445e-27,
    8.191037578220841e-27,
    4.115885204271834e-26,
    2.056535726516158e-25,
    1.022060113678317e-24,
    5.0535190303998465e-24,
    2.4865153204763887e-23,
    1.217765573392371e-22,
    5.93746130233919e-22,
    2.882610015713452e-21,
    1.393789390638859e-20,
    6.712864737754346e-20,
    3.220972193613786e-19,
    1.53992350631072e-18,
    7.336778172721483e-18,
    3.483879907976057e-17,
];

pub(crate) const C4: [f64; 50] = [
    0.00046483389361763383,
    -0.001005660736534047,
    0.00024044856573725794,
    0.0010283086149702322,
    -0.0007657861071755644,
    -0.00020365286803084818,
    0.0002321229049106873,
    3.2602144243865195e-05,
    -2.5579062517949524e-05,
    -4.107464438915745e-06,
    1.1781113640371294e-06,
    2.445656142248458e-07,
    -2.3915824767344323e-08,
    -7.505214207035756e-09,
    1.3312279416258429e-10,
    1.344062675422562e-10,
    3.513770042430486e-12,
    -1.519154453370392e-12,
    -8.915417681447087e-14,
    1.1195891165228536e-14,
    1.0516013329914816e-15,
    -5.1786552736466835e-17,
    -8.065874861916566e-18,
    1.0608204530563552e-19,
    4.4336806742968107e-20,
    4.3200511454306035e-22,
    -1.8230389327168237e-22,
    -5.1199427676662454e-24,
    5.694664771387323e-25,
    2.6488368503533454e-26,
    -2.5017211954768078e-27,
    -6.772691685725715e-27,
    -3.7748115845699034e-26,
    -2.1140113079331943e-25,
    -1.173008164690344e-24,
    -6.452271089506285e-24,
    -3.5199702146768547e-23,
    -1.9052924714827767e-22,
    -1.0236431869433287e-21,
    -5.460792574690804e-21,
    -2.893528233590728e-20,
    -1.5233495446483709e-19,
    -7.97070887283146e-19,
    -4.146076462407242e-18,
    -2.1445220224990757e-17,
    -1.1032640807634414e-16,
    -5.646518655405961e-16,
    -2.875577507450838e-15,
    -1.4574636268680357e-14,
    -7.353245301009121e-14,
];

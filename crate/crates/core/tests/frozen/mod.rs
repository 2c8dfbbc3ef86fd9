//! Reference values computed with mpmath at 40 digits.

pub const GAMMA: &[((f64, f64), (f64, f64))] = &[
    ((-9.3, 0.4), (2.5477269094757927e-07, 2.4348466559281536e-06)),
    ((-4.5, 0.0), (-0.060019601300504245, 0.0)),
    ((-0.5, 9.7), (-1.6855646978405926e-08, -5.998073881197721e-08)),
    ((0.1, -3.0), (0.013662874927575556, 0.004915311156096227)),
    ((1.7, 0.0), (0.9086387328532904, 0.0)),
    ((3.2, 6.1), (-0.016749871695271795, 0.018196411840027855)),
    ((12.5, -9.9), (3054523.50455008, -1353124.6952254856)),
    ((29.5, 0.5), (-1.8338824266947777e+29, 1.61741874197593e+30)),
    ((-7.25, -8.5), (8.313211279881651e-14, -6.251149503260403e-14)),
    ((0.5, 0.0), (1.772453850905516, 0.0)),
];
pub const DIGAMMA: &[((f64, f64), (f64, f64))] = &[
    ((-9.3, 0.4), (2.7417502741912525, 2.912969597413682)),
    ((-4.5, 0.0), (1.6110931485817512, 0.0)),
    ((-0.5, 9.7), (2.2769821975787745, 1.6736159155165418)),
    ((0.1, -3.0), (1.1029544444805817, -1.704587907024093)),
    ((1.7, 0.0), (0.2085478748734939, 0.0)),
    ((3.2, 6.1), (1.897115433451188, 1.1533972806535422)),
    ((12.5, -9.9), (2.7445223570752857, -0.6896310595553378)),
    ((29.5, 0.5), (3.367493930239078, 0.017237964498595923)),
    ((-7.25, -8.5), (2.442554677408895, -2.310387021237741)),
    ((0.5, 0.0), (-1.9635100260214235, 0.0)),
];
pub const VALUES: &[(&str, &[(f64, f64)], (f64, f64), (f64, f64))] = &[
    ("F0", &[(0.0, 0.0)], (1.0, 0.0), (2.2795853023360673, 0.0)),
    ("F0", &[(0.3, 0.0)], (-2.0, 1.5), (-0.20260537173654788, 0.41983132376085713)),
    ("F0", &[(-2.0, 0.0)], (0.5, 0.5), (-0.047048505601162915, 0.2914857184366135)),
    ("F1", &[(0.4, 0.0), (0.25, 0.0)], (3.0, 1.0), (7.232066011156124, 8.439113598818565)),
    ("F1", &[(1.9, 0.0), (2.0, 0.0)], (-1.0, 0.5), (0.20755094396118012, 0.08467320575856872)),
    ("F2", &[(0.2, 0.0), (0.3, 0.0), (0.4, 0.0)], (0.6, -0.5), (1.2384701411111458, -0.49373168265237904)),
    ("F2", &[(1.0, 0.0), (0.3, 0.0), (0.2, 0.0)], (-0.9, 0.1), (0.6448145458343414, 0.023952781581048053)),
    ("D0", &[(2.0, 0.0)], (0.5, 0.0), (-2.3258700592553354, 0.0)),
    ("D0", &[(0.0, 0.0)], (3.0, -2.0), (-2.281983621715955, 11.087279233094444)),
    ("D1", &[(0.3, 0.0), (3.0, 0.0)], (-1.5, 0.7), (-0.7740662197103325, 1.1597553453864013)),
    ("D2", &[(2.0, 0.0), (0.45, 0.0), (0.1, 0.0)], (-0.4, 0.6), (16.828694199923522, -49.11468959755093)),
    ("U0", &[(0.3, 0.0)], (2.0, 0.0), (0.043709544661938535, 0.0)),
    ("U0", &[(1.0, 0.0)], (0.5, 0.0), (0.5013868467212607, 0.0)),
    ("U0", &[(0.0, 0.0)], (25.0, 0.0), (2.0062651907223565e-05, 0.0)),
    ("U1", &[(0.4, 0.0), (0.25, 0.0)], (1.5, 0.0), (0.5843607055897709, 0.0)),
    ("U1", &[(0.7, 0.0), (2.0, 0.0)], (0.6, -0.2), (2.275444622743054, 1.6525443022093267)),
    ("U1", &[(0.4, 0.0), (0.5, 0.0)], (30.0, 0.0), (0.038974088529557485, 0.0)),
    ("U2", &[(0.2, 0.0), (0.3, 0.0), (0.4, 0.0)], (-0.3, 0.2), (0.761818813597539, 0.13970536783093263)),
    ("U2", &[(1.0, 0.0), (0.3, 0.0), (0.2, 0.0)], (-0.4, 0.0), (2.0822876489523185, 0.0)),
    ("U2", &[(0.2, 0.0), (0.3, 0.0), (0.4, 0.0)], (-2.0, 1.0), (0.37746002947156876, 0.08016655701235066)),
    ("K", &[(0.0, 0.0)], (1.0, 0.0), (0.42102443824070834, 0.0)),
    ("K", &[(1.0, 0.0)], (1.0, 0.0), (0.6019072301972346, 0.0)),
    ("K", &[(3.0, 0.0)], (1.5, 0.5), (0.6878676739972875, -1.4420443452573595)),
    ("I", &[(2.0, 0.0)], (1.0, 2.0), (-0.4126719082931705, 0.26597392279838855)),
    ("J", &[(1.0, 0.0)], (3.0, -1.0), (0.43261563940523967, 0.42950578688424357)),
    ("H1", &[(1.0, 0.0)], (2.0, 0.1), (0.5223126526206523, -0.11248733771019713)),
    ("H2", &[(2.0, 0.0)], (2.0, 0.1), (0.40428686907794875, 0.6385723686235216)),
];

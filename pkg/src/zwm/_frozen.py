"""Frozen derived constants. Machine-generated; do not edit.

Regenerate with scripts/gen_frozen_constants.py (sympy + mpmath at 50
digits); the generator re-verifies every table before writing."""

# Stieltjes constants gamma_0 .. gamma_12
STIELTJES = [
    0.5772156649015329, -0.07281584548367673, -0.00969036319287232,
    0.002053834420303346, 0.0023253700654673, 0.0007933238173010627,
    -0.0002387693454301996, -0.000527289567057751, -0.0003521233538030395,
    -3.439477441808805e-05, 0.0002053328149090648, 0.0002701844395439035,
    0.0001672729121051402,
]

# (zeta'/zeta)(1+x) = -1/x + sum_k LOGDERIV_NEAR_ONE[k] x^k
LOGDERIV_NEAR_ONE = [
    0.5772156649015329, -0.18754623284036523, 0.05168863203319289,
    -0.014751658825453744, 0.004524477888495379, -0.001446795204525183,
    0.00047154407818540505, -0.00015518029416423026, 5.1345212118144146e-05,
    -1.7041357047110643e-05, 5.6660509210404755e-06,
]

# zeta(1-x) = -1/x + sum_k ZETA_ONE_MINUS[k] x^k  (= gamma_k / k!)
ZETA_ONE_MINUS = [
    0.5772156649015329, -0.07281584548367673, -0.00484518159643616,
    0.00034230573671722433, 9.689041939447084e-05, 6.6110318108421895e-06,
    -3.316240908752772e-07, -1.0462094584479188e-07, -8.733218100273798e-09,
    -9.47827778276236e-11, 5.658421927608708e-11,
]

# -(zeta'/zeta)(1+x)/(1+x) = 1/x + sum_k MALPHA_A_REG[k] x^k
MALPHA_A_REG = [
    -1.5772156649015328, 1.7647618977418982, -1.816450529775091,
    1.8312021886005447, -1.8357266664890401, 1.8371734616935653,
    -1.8376450057717506, 1.837800186065915, -1.837851531278033,
    1.83786857263508, -1.8378742386860012,
]

# small-a Taylor tables, coefficients of a^k for k = 0..12
# (GGM_UNWEIGHTED is the regular part: value = 1/(2a) + sum_k c_k a^k)
FORMULA_TAYLOR = {
    "F_PRED": [1/3, -5/24, 3/40, -13/720, 13/5040, 1/13440, -67/362880, 37/518400, -257/13305600, 293/68428800, -5123/6227020800, 4097/29059430400, -1147/52306974720],
    "F1": [1/3, -5/24, 1/24, -1/144, 1/1008, -1/8064, 1/72576, -1/725760, 1/7983360, -1/95800320, 1/1245404160, -1/17435658240, 1/261534873600],
    "F2": [1/3, -1/6, 1/15, -1/60, 1/280, -1/1680, 1/11340, -1/90720, 1/798336, -1/7983360, 1/86486400, -1/1037836800, 1/13343616000],
    "LEMMA22_MAIN": [1/3, -1/4, 7/120, -1/90, 1/560, -1/4032, 11/362880, -1/302400, 13/39916800, -1/34214400, 1/415134720, -1/5448643200, 17/1307674368000],
    "I1_MAIN": [-1/2, 1/6, -1/24, 1/120, -1/720, 1/5040, -1/40320, 1/362880, -1/3628800, 1/39916800, -1/479001600, 1/6227020800, -1/87178291200],
    "I2_MAIN": [1/6, -1/12, 1/40, -1/180, 1/1008, -1/6720, 1/51840, -1/453600, 1/4435200, -1/47900160, 1/566092800, -1/7264857600, 1/100590336000],
    "DIAG_MAIN": [0, 1/48, -1/120, 1/480, -1/2520, 1/16128, -1/120960, 1/1036800, -1/9979200, 1/106444800, -1/1245404160, 1/15850598400, -1/217945728000],
    "INGHAM_MAIN": [1/3, -1/2, 2/5, -2/9, 2/21, -1/30, 4/405, -4/1575, 2/3465, -1/8505, 4/184275, -4/1091475, 4/7016625],
    "GGM_UNWEIGHTED": [-1/2, 1/3, -1/6, 1/15, -1/45, 2/315, -1/630, 1/2835, -1/14175, 2/155925, -1/467775, 2/6081075, -2/42567525],
}

# Taylor expansions of the remainder profile
# Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
# around its removable singularities p = 1/4 and p = 3/4
RS_PSI_QUARTER = [
    0.5, -1.0, 2.4674011002723395,
    -1.6449340668482264, 0.27717591495256194, 4.685670608398414,
    -7.979031066936239, 8.852130154516512,
]

RS_PSI_THREEQ = [
    0.5, 1.0, 2.4674011002723395,
    1.6449340668482264, 0.27717591495256194, -4.685670608398414,
    -7.979031066936239, -8.852130154516512,
]

# 15-point Gauss-Kronrod rule on [-1, 1]; G7_WEIGHTS aligned to the
# Kronrod nodes with zeros at Kronrod-only abscissae
GK15_NODES = [
    -0.9914553711208126, -0.9491079123427585, -0.8648644233597691,
    -0.7415311855993945, -0.5860872354676911, -0.4058451513773972,
    -0.20778495500789848, 0.0, 0.20778495500789848,
    0.4058451513773972, 0.5860872354676911, 0.7415311855993945,
    0.8648644233597691, 0.9491079123427585, 0.9914553711208126,
]

GK15_WEIGHTS = [
    0.022935322010529224, 0.06309209262997856, 0.10479001032225019,
    0.14065325971552592, 0.1690047266392679, 0.19035057806478542,
    0.20443294007529889, 0.20948214108472782, 0.20443294007529889,
    0.19035057806478542, 0.1690047266392679, 0.14065325971552592,
    0.10479001032225019, 0.06309209262997856, 0.022935322010529224,
]

G7_WEIGHTS = [
    0.0, 0.1294849661688697, 0.0,
    0.27970539148927664, 0.0, 0.3818300505051189,
    0.0, 0.4179591836734694, 0.0,
    0.3818300505051189, 0.0, 0.27970539148927664,
    0.0, 0.1294849661688697, 0.0,
]

"""Known closed-form values of the polynomial families, used as cross-checks.

Conventional and generalized Okamoto polynomials (exact, including sqrt2
factors) and the first five entries of each higher-mode sequence at k = 1
and k = 3 (fixed only up to the scaling freedom of the recurrence, so the
mode entries are compared up to a positive scalar).
"""

from __future__ import annotations

from .exact_ring import ExactPoly, SqrtTwoScalar


def _poly(pairs: list[tuple[int, int]], sqrt2: bool = False) -> ExactPoly:
    degree = max(d for d, _ in pairs)
    coeffs: list[SqrtTwoScalar] = [SqrtTwoScalar(0, 0)] * (degree + 1)
    for d, c in pairs:
        coeffs[d] = SqrtTwoScalar(0, c) if sqrt2 else SqrtTwoScalar(c, 0)
    return ExactPoly(coeffs)


def _odd(pairs: list[tuple[int, int]], sqrt2: bool = False) -> ExactPoly:
    """x times the given even polynomial (for entries printed as x*(...))."""
    return _poly([(d + 1, c) for d, c in pairs], sqrt2)


# Q_k = Q_{k,0}, k = 0..5
OKAMOTO_COLUMN_0: dict[int, ExactPoly] = {
    0: _poly([(0, 1)]),
    1: _poly([(0, 1)]),
    2: _poly([(2, 2), (0, 3)]),
    3: _poly([(6, 8), (4, 60), (2, 90), (0, 135)]),
    4: _poly(
        [(12, 64), (10, 1344), (8, 9360), (6, 30240), (4, 56700), (2, 170100), (0, 127575)]
    ),
    5: _poly(
        [
            (20, 1024),
            (18, 46080),
            (16, 817920),
            (14, 7603200),
            (12, 41731200),
            (10, 155675520),
            (8, 493970400),
            (6, 1886068800),
            (4, 5304568500),
            (2, 5304568500),
            (0, 3978426375),
        ]
    ),
}

# Q_{k,1}, k = 0..5
OKAMOTO_COLUMN_PLUS_1: dict[int, ExactPoly] = {
    0: _poly([(0, 1)]),
    1: _poly([(1, 1)], sqrt2=True),
    2: _poly([(4, 4), (2, 12), (0, -9)]),
    3: _odd([(8, 16), (6, 192), (4, 504), (0, -2835)], sqrt2=True),
    4: _poly(
        [
            (16, 256),
            (14, 7680),
            (12, 80640),
            (10, 362880),
            (8, 453600),
            (6, -1905120),
            (4, -14288400),
            (2, -21432600),
            (0, 8037225),
        ]
    ),
    5: _odd(
        [
            (24, 4096),
            (22, 245760),
            (20, 5990400),
            (18, 77414400),
            (16, 569721600),
            (14, 2246952960),
            (12, 1600300800),
            (10, -35663846400),
            (8, -275837562000),
            (6, -1103350248000),
            (4, -1737776640600),
            (0, 3258331201125),
        ],
        sqrt2=True,
    ),
}

# Q_{k,-1}, k = 0..5
OKAMOTO_COLUMN_MINUS_1: dict[int, ExactPoly] = {
    0: _poly([(2, 2), (0, 3)]),
    1: _poly([(1, 1)], sqrt2=True),
    2: _poly([(2, 2), (0, -3)]),
    3: _odd([(4, 4), (0, -45)], sqrt2=True),
    4: _poly([(10, 32), (8, 240), (6, -720), (4, -5400), (2, -12150), (0, 6075)]),
    5: _odd(
        [
            (16, 256),
            (14, 6144),
            (12, 34560),
            (10, -138240),
            (8, -2138400),
            (6, -8553600),
            (4, -22453200),
            (0, 63149625),
        ],
        sqrt2=True,
    ),
}

# Higher-mode sequence entries, up to a positive scalar: MODE_TABLE[(k, j)][n]
MODE_TABLE: dict[tuple[int, int], list[ExactPoly]] = {
    (1, 1): [
        _poly([(0, 1)]),
        _odd([(2, 2), (0, 9)]),
        _poly([(6, 8), (4, -36), (2, -162), (0, 81)]),
        _odd([(8, 16), (6, -432), (4, 1944), (2, 4860), (0, -10935)]),
        _poly(
            [
                (12, 64),
                (10, -4032),
                (8, 73872),
                (6, -381024),
                (4, -306180),
                (2, 2755620),
                (0, -688905),
            ]
        ),
    ],
    (3, 1): [
        _poly([(6, 8), (4, 60), (2, 90), (0, 135)]),
        _odd([(8, 16), (6, 480), (4, 3528), (2, 7560), (0, 8505)]),
        _poly(
            [
                (12, 64),
                (10, 2496),
                (8, 35280),
                (6, 211680),
                (4, 510300),
                (2, 510300),
                (0, -382725),
            ]
        ),
        _odd(
            [
                (14, 128),
                (12, 4416),
                (10, 58464),
                (8, 390960),
                (6, 1370520),
                (4, 2143260),
                (2, -2296350),
                (0, -10333575),
            ]
        ),
        _poly(
            [
                (18, 512),
                (16, 8448),
                (14, -32256),
                (12, -1126656),
                (10, -6516288),
                (8, -12247200),
                (6, -7348320),
                (4, 165337200),
                (2, 310007250),
                (0, -93002175),
            ]
        ),
    ],
    (1, 2): [
        _poly([(4, 4), (2, 12), (0, -9)]),
        _odd([(6, 8), (4, -84), (2, -126), (0, 567)]),
        _poly([(10, 32), (8, -1200), (6, 10080), (2, -85050), (0, 25515)]),
        _odd(
            [
                (12, 64),
                (10, -4992),
                (8, 121680),
                (6, -1010880),
                (4, 1326780),
                (2, 7960680),
                (0, -8955765),
            ]
        ),
        _poly(
            [
                (16, 256),
                (14, -33792),
                (12, 1587456),
                (10, -32617728),
                (8, 283551840),
                (6, -700539840),
                (4, -1576214640),
                (2, 4728643920),
                (0, -886620735),
            ]
        ),
    ],
    (3, 2): [
        _poly(
            [
                (16, 256),
                (14, 7680),
                (12, 80640),
                (10, 362880),
                (8, 453600),
                (6, -1905120),
                (4, -14288400),
                (2, -21432600),
                (0, 8037225),
            ]
        ),
        _odd(
            [
                (18, 512),
                (16, 3840),
                (14, -129024),
                (12, -1451520),
                (10, -2358720),
                (8, 24766560),
                (6, 106142400),
                (4, 445798080),
                (2, 208967850),
                (0, -940355325),
            ]
        ),
        _poly(
            [
                (22, 2048),
                (20, -58368),
                (18, -806400),
                (16, 13996800),
                (14, 131155200),
                (12, -240589440),
                (10, -4606580160),
                (8, -8438320800),
                (6, -39285955800),
                (4, 56421319500),
                (2, 197474618250),
                (0, -42315989625),
            ]
        ),
        _odd(
            [
                (24, 4096),
                (22, -319488),
                (20, 4773888),
                (18, 85432320),
                (16, -1369094400),
                (14, -8770083840),
                (12, 58205226240),
                (10, 430768316160),
                (8, -186041091600),
                (6, 1715208112800),
                (4, -14150466930600),
                (2, -19296091269000),
                (0, 21708102677625),
            ]
        ),
        _poly(
            [
                (28, 16384),
                (26, -2310144),
                (24, 102371328),
                (22, -1135337472),
                (20, -22142647296),
                (18, 383543424000),
                (16, 1297481898240),
                (14, -21340876170240),
                (12, -79981334072640),
                (10, 351830022223680),
                (8, -222364480338000),
                (6, 5263973698183200),
                (4, 955156517815500),
                (2, -14327347767232500),
                (0, 2149102165084875),
            ]
        ),
    ],
    (1, 3): [
        _odd([(4, 4), (0, -45)]),
        _poly([(8, 16), (6, -288), (4, 360), (2, 3240), (0, -1215)]),
        _odd([(10, 32), (8, -1584), (6, 20592), (4, -49896), (2, -187110), (0, 280665)]),
        _poly(
            [
                (14, 128),
                (12, -12096),
                (10, 376992),
                (8, -4490640),
                (6, 15717240),
                (4, 23575860),
                (2, -106091370),
                (0, 22733865),
            ]
        ),
        _odd(
            [
                (16, 256),
                (14, -39168),
                (12, 2193408),
                (10, -56137536),
                (8, 661620960),
                (6, -2977294320),
                (2, 20096736660),
                (0, -15072552495),
            ]
        ),
    ],
    (3, 3): [
        _odd(
            [
                (16, 256),
                (14, 6144),
                (12, 34560),
                (10, -138240),
                (8, -2138400),
                (6, -8553600),
                (4, -22453200),
                (0, 63149625),
            ]
        ),
        _poly(
            [
                (20, 1024),
                (18, -3072),
                (16, -407808),
                (14, -1797120),
                (12, 18506880),
                (10, 155675520),
                (8, 314344800),
                (6, 808315200),
                (4, -2778583500),
                (2, -6820159500),
                (0, 1705039875),
            ]
        ),
        _odd(
            [
                (22, 2048),
                (20, -89088),
                (18, -290304),
                (16, 27530496),
                (14, 66624768),
                (12, -1684126080),
                (10, -8355856320),
                (8, 6870679200),
                (6, 1717669800),
                (4, 378746190900),
                (2, 405799490250),
                (0, -608699235375),
            ]
        ),
        _poly(
            [
                (26, 8192),
                (24, -798720),
                (22, 19353600),
                (20, 102574080),
                (18, -5769792000),
                (16, -629233920),
                (14, 391975718400),
                (12, 884443795200),
                (10, -6959998029600),
                (8, -3246395922000),
                (6, -95444040106800),
                (4, 14608781649000),
                (2, 295827828392250),
                (0, -49304638065375),
            ]
        ),
        _odd(
            [
                (28, 16384),
                (26, -2703360),
                (24, 149409792),
                (22, -2765905920),
                (20, -15309388800),
                (18, 819467228160),
                (16, -1871143545600),
                (14, -54521712645120),
                (12, 22612029854400),
                (10, 1482481454126400),
                (8, -1026139373859600),
                (6, 12480073465860000),
                (4, -27518561992221300),
                (2, -58968347126188500),
                (0, 44226260344641375),
            ]
        ),
    ],
}

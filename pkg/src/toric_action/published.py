"""Closed forms as printed in the source article, transcribed verbatim at delta = 1.

Variables: a = alpha, b = beta, g = gamma.  These strings are only ever used
as independent comparison targets; the package derives everything itself.
Known transcription repairs are noted beside the affected entries.
"""

PRINTED = {
    'dp2_F1_bracket': (
        '(b - 2 * g) * ((1 / 3) + g + g**2) + g * (g - b) * (2 + b + 2 * g)'
    ),
    'dp2_F2_bracket': (
        '(g - 2 * b) * ((1 / 3) + b + b**2) + b * (b - g) * (2 + g + 2 * b)'
    ),
    'dp2_V': (
        'b * g + b + g + (1 / 2)'
    ),
    'dp2_A_num': (
        '1 + 6 * (1 + b) * (b + b**2 + b**3 + g * (1 + 4 * b + 4 * b**2 + 2 * b**3) + g**2 * (1 '
        '+ b)**3)'
    ),
    'dp2_B_num': (
        '1 + 6 * (1 + g) * (g + g**2 + g**3 + b * (1 + 4 * g + 4 * g**2 + 2 * g**3) + b**2 * (1 '
        '+ g)**3)'
    ),
    'dp2_C_num': (
        '1 + 6 * (1 + b) * (1 + g) * (b + g + 3 * b * g)'
    ),
    'dp2_calB_num': (
        '8 * (g**2 * (1 + 4 * g + 6 * g**2 + 4 * g**3) + b * g * (- 1 + 3 * g + 18 * g**2 + 26 * '
        'g**3 + 16 * g**4) + 2 * b**5 * (2 + 8 * g + 21 * g**2 + 33 * g**3 + 27 * g**4 + 9 * '
        'g**5) + b**2 * (1 + 3 * g + 27 * g**2 + 79 * g**3 + 89 * g**4 + 42 * g**5) + b**4 * (6 '
        '+ 26 * g + 89 * g**2 + 168 * g**3 + 150 * g**4 + 54 * g**5) + b**3 * (4 + 18 * g + 79 * '
        'g**2 + 173 * g**3 + 168 * g**4 + 66 * g**5))'
    ),
    'dp2_calB_den': (
        '(48 * b**6 * (1 + g)**6 + 48 * b**5 * (1 + g)**3 * (3 + 12 * g + 14 * g**2 + 6 * g**3) '
        '+ (1 + 2 * g)**2 * (1 + 8 * g + 20 * g**2 + 24 * g**3 + 12 * g**4) + 4 * b**4 * (1 + '
        'g)**2 * (47 + 282 * g + 573 * g**2 + 504 * g**3 + 180 * g**4) + 4 * b * (3 + 33 * g + '
        '140 * g**2 + 306 * g**3 + 376 * g**4 + 252 * g**5 + 72 * g**6) + 8 * b**2 * (7 + 70 * g '
        '+ 270 * g**2 + 535 * g**3 + 592 * g**4 + 354 * g**5 + 90 * g**6) + 8 * b**3 * (17 + 153 '
        '* g + 535 * g**2 + 963 * g**3 + 966 * g**4 + 522 * g**5 + 120 * g**6))'
    ),
    'dp2_up1_diff': (
        '1 + 12 * g + 24 * g**2 + 8 * g**3 - 4 * g**4 + 16 * g**5 + 48 * g**6 + 48 * b**6 * (1 + '
        'g)**6 + 16 * b**5 * (1 + 31 * g + 93 * g**2 + 129 * g**3 + 108 * g**4 + 60 * g**5 + 18 '
        '* g**6) + 4 * b * (3 + 41 * g + 116 * g**2 + 162 * g**3 + 168 * g**4 + 124 * g**5 + 72 '
        '* g**6) + 8 * b**2 * (3 + 58 * g + 162 * g**2 + 219 * g**3 + 236 * g**4 + 186 * g**5 + '
        '90 * g**6) + 8 * b**3 * (1 + 81 * g + 219 * g**2 + 271 * g**3 + 294 * g**4 + 258 * g**5 '
        '+ 120 * g**6) + 4 * b**4 * (- 1 + 168 * g + 472 * g**2 + 588 * g**3 + 561 * g**4 + 432 '
        '* g**5 + 180 * g**6)'
    ),
    'dp2_a_num': (
        '- 192 * g * (1 + 4 * g + 6 * g**2 + 4 * g**3 + 6 * b**3 * (1 + g)**3 + 2 * b**2 * (6 + '
        '18 * g + 17 * g**2 + 6 * g**3) + b * (7 + 21 * g + 22 * g**2 + 10 * g**3))'
    ),
    'dp2_a_den': (
        '(1 + 10 * g + 36 * g**2 + 64 * g**3 + 60 * g**4 + 24 * g**5 + 24 * b**5 * (1 + g)**5 + '
        '12 * b**4 * (1 + g)**2 * (5 + 20 * g + 23 * g**2 + 10 * g**3) + 16 * b**3 * (4 + 28 * g '
        '+ 72 * g**2 + 90 * g**3 + 57 * g**4 + 15 * g**5) + 12 * b**2 * (3 + 24 * g + 69 * g**2 '
        '+ 96 * g**3 + 68 * g**4 + 20 * g**5) + 2 * b * (5 + 45 * g + 144 * g**2 + 224 * g**3 + '
        '180 * g**4 + 60 * g**5))'
    ),
    'dp2_smin_num': (
        '24 * ((1 + 2 * g) * (1 + 2 * g + 2 * g**2)**2 + 8 * b**5 * (1 + g)**4 + 4 * b**4 * (5 + '
        '24 * g + 40 * g**2 + 32 * g**3 + 13 * g**4 + 2 * g**5) + 8 * b**3 * (3 + 14 * g + 25 * '
        'g**2 + 26 * g**3 + 16 * g**4 + 4 * g**5) + 4 * b**2 * (4 + 16 * g + 33 * g**2 + 50 * '
        'g**3 + 40 * g**4 + 12 * g**5) + 2 * b * (3 + 12 * g + 32 * g**2 + 56 * g**3 + 48 * g**4 '
        '+ 16 * g**5))'
    ),
    'dp2_smin_den': (
        '(1 + 10 * g + 36 * g**2 + 64 * g**3 + 60 * g**4 + 24 * g**5 + 24 * b**5 * (1 + g)**5 + '
        '12 * b**4 * (1 + g)**2 * (5 + 20 * g + 23 * g**2 + 10 * g**3) + 16 * b**3 * (4 + 28 * g '
        '+ 72 * g**2 + 90 * g**3 + 57 * g**4 + 15 * g**5) + 12 * b**2 * (3 + 24 * g + 69 * g**2 '
        '+ 96 * g**3 + 68 * g**4 + 20 * g**5) + 2 * b * (5 + 45 * g + 144 * g**2 + 224 * g**3 + '
        '180 * g**4 + 60 * g**5))'
    ),
    'dp3_F1_bracket': (
        '(a + b - 2 * g) * ((1 / 3) + g + g**2) + (g - a) * (g - b) * (2 + a + b + 2 * g)'
    ),
    'dp3_F2_bracket': (
        '(a + g - 2 * b) * ((1 / 3) + b + b**2) + (b - a) * (b - g) * (2 + a + g + 2 * b)'
    ),
    'dp3_V': (
        'a * b + a * g + b * g + a + b + g + (1 / 2)'
    ),
    'dp3_A_num': (
        '(1 + 6 * b + 12 * b**2 + 12 * b**3 + 6 * b**4 + 6 * g**2 * (1 + b)**4 + 6 * a**4 * (1 + '
        'g + b)**2 + 6 * g * (1 + 5 * b + 8 * b**2 + 6 * b**3 + 2 * b**4) + 6 * a**2 * (2 + 8 * '
        'b + 9 * b**2 + 4 * b**3 + b**4 + 6 * g**2 * (1 + b)**2 + 2 * g * (2 + b)**2 * (1 + 2 * '
        'b)) + 12 * a**3 * (1 + 3 * b + 2 * b**2 + 2 * g**2 * (1 + b) + g * (3 + 6 * b + 2 * '
        'b**2)) + 6 * a * (1 + 5 * b + 8 * b**2 + 6 * b**3 + 2 * b**4 + 4 * g**2 * (1 + b)**3 + '
        'g * (5 + 20 * b + 24 * b**2 + 12 * b**3 + 2 * b**4)))'
    ),
    'dp3_B_num': (
        '(1 + 6 * g + 12 * g**2 + 12 * g**3 + 6 * g**4 + 6 * b**2 * (1 + g)**4 + 6 * a**4 * (1 + '
        'b + g)**2 + 6 * b * (1 + 5 * g + 8 * g**2 + 6 * g**3 + 2 * g**4) + 6 * a**2 * (2 + 8 * '
        'g + 9 * g**2 + 4 * g**3 + g**4 + 6 * b**2 * (1 + g)**2 + 2 * b * (2 + g)**2 * (1 + 2 * '
        'g)) + 12 * a**3 * (1 + 3 * g + 2 * g**2 + 2 * b**2 * (1 + g) + b * (3 + 6 * g + 2 * '
        'g**2)) + 6 * a * (1 + 5 * g + 8 * g**2 + 6 * g**3 + 2 * g**4 + 4 * b**2 * (1 + g)**3 + '
        'b * (5 + 20 * g + 24 * g**2 + 12 * g**3 + 2 * g**4)))'
    ),
    'dp3_C_num': (
        '(1 + 6 * g + 6 * g**2 + 12 * a**4 * (1 + b + g)**2 + 6 * b**2 * (1 + 4 * g + 3 * g**2) '
        '+ 6 * b * (1 + 5 * g + 4 * g**2) + 24 * a**3 * (1 + 3 * g + 2 * g**2 + 2 * b**2 * (1 + '
        'g) + b * (3 + 6 * g + 2 * g**2)) + 18 * a**2 * (1 + 4 * g + 3 * g**2 + b**2 * (3 + 6 * '
        'g + 2 * g**2) + 2 * b * (2 + 6 * g + 3 * g**2)) + 6 * a * (1 + 5 * g + 4 * g**2 + 2 * '
        'b**2 * (2 + 6 * g + 3 * g**2) + b * (5 + 20 * g + 12 * g**2)))'
    ),
    'dp3_calB_num': (
        '(g**2 * (1 + 4 * g + 6 * g**2 + 4 * g**3) + b * g * (- 1 + 3 * g + 18 * g**2 + 26 * '
        'g**3 + 16 * g**4) + 2 * b**5 * (2 + 8 * g + 21 * g**2 + 33 * g**3 + 27 * g**4 + 9 * '
        'g**5) + b**2 * (1 + 3 * g + 27 * g**2 + 79 * g**3 + 89 * g**4 + 42 * g**5) + b**4 * (6 '
        '+ 26 * g + 89 * g**2 + 168 * g**3 + 150 * g**4 + 54 * g**5) + b**3 * (4 + 18 * g + 79 * '
        'g**2 + 173 * g**3 + 168 * g**4 + 66 * g**5) + 2 * a**5 * (2 + 9 * b**5 + 8 * g + 21 * '
        'g**2 + 33 * g**3 + 27 * g**4 + 9 * g**5 + 9 * b**4 * (3 + g) + 3 * b**2 * (7 + 5 * g) + '
        '3 * b**3 * (11 + 6 * g) + b * (8 + 12 * g + 15 * g**2 + 18 * g**3 + 9 * g**4)) + a**4 * '
        '(168 * g**3 + 150 * g**4 + 54 * g**5 + 18 * b**5 * (3 + g) + b**4 * (150 + 72 * g - 18 '
        '* g**2) + 6 * b**3 * (28 + 12 * g - 15 * g**2 - 6 * g**3) + 6 + 26 * g + 89 * g**2 + '
        'b**2 * (89 - 6 * g - 162 * g**2 - 90 * g**3 - 18 * g**4) + 2 * b * (13 + 2 * g - 3 * '
        'g**2 + 36 * g**3 + 36 * g**4 + 9 * g**5)) + a**2 * (1 + 3 * g + 27 * g**2 + 79 * g**3 + '
        '89 * g**4 + 42 * g**5 + 6 * b**5 * (7 + 5 * g) - b**4 * (- 89 + 6 * g + 162 * g**2 + 90 '
        '* g**3 + 18 * g**4) + 3 * b**2 * (9 - 56 * g - 165 * g**2 - 144 * g**3 - 54 * g**4) - '
        'b**3 * (- 79 + 111 * g + 432 * g**2 + 324 * g**3 + 90 * g**4) + 3 * b * (1 - 23 * g - '
        '56 * g**2 - 37 * g**3 - 2 * g**4 + 10 * g**5)) + a**3 * (4 + 18 * g + 79 * g**2 + 173 * '
        'g**3 + 168 * g**4 + 66 * g**5 + 6 * b**5 * (11 + 6 * g) + 6 * b**4 * (28 + 12 * g - 15 '
        '* g**2 - 6 * g**3) + b**3 * (173 - 324 * g**2 - 216 * g**3 - 36 * g**4) - b**2 * (- 79 '
        '+ 111 * g + 432 * g**2 + 324 * g**3 + 90 * g**4) + b * (18 - 46 * g - 111 * g**2 + 72 * '
        'g**4 + 36 * g**5)) + a * (2 * b**5 * (8 + 12 * g + 15 * g**2 + 18 * g**3 + 9 * g**4) + '
        'g * (- 1 + 3 * g + 18 * g**2 + 26 * g**3 + 16 * g**4) + 2 * b**4 * (13 + 2 * g - 3 * '
        'g**2 + 36 * g**3 + 36 * g**4 + 9 * g**5) + 3 * b**2 * (1 - 23 * g - 56 * g**2 - 37 * '
        'g**3 - 2 * g**4 + 10 * g**5) + b * (- 1 - 30 * g - 69 * g**2 - 46 * g**3 + 4 * g**4 + '
        '24 * g**5) + b**3 * (18 - 46 * g - 111 * g**2 + 72 * g**4 + 36 * g**5)))'
    ),
    'dp3_up2_diff': (
        '1 + 12 * g + 24 * g**2 + 8 * g**3 - 4 * g**4 + 16 * g**5 + 48 * g**6 + 48 * b**6 * (1 + '
        'g)**6 + 48 * a**6 * (1 + b + g)**6 + 16 * b**5 * (1 + 31 * g + 93 * g**2 + 129 * g**3 + '
        '108 * g**4 + 60 * g**5 + 18 * g**6) + 4 * b * (3 + 41 * g + 116 * g**2 + 162 * g**3 + '
        '168 * g**4 + 124 * g**5 + 72 * g**6) + 8 * b**2 * (3 + 58 * g + 162 * g**2 + 219 * g**3 '
        '+ 236 * g**4 + 186 * g**5 + 90 * g**6) + 8 * b**3 * (1 + 81 * g + 219 * g**2 + 271 * '
        'g**3 + 294 * g**4 + 258 * g**5 + 120 * g**6) + 4 * b**4 * (- 1 + 168 * g + 472 * g**2 + '
        '588 * g**3 + 561 * g**4 + 432 * g**5 + 180 * g**6) + 16 * a**5 * (1 + 31 * g + 93 * '
        'g**2 + 129 * g**3 + 108 * g**4 + 60 * g**5 + 18 * g**6 + 18 * b**6 * (1 + g) + 12 * '
        'b**5 * (5 + 16 * g + 7 * g**2) + 6 * b**4 * (18 + 102 * g + 98 * g**2 + 27 * g**3) + 3 '
        '* b**3 * (43 + 324 * g + 482 * g**2 + 276 * g**3 + 54 * g**4) + 3 * b**2 * (31 + 275 * '
        'g + 550 * g**2 + 482 * g**3 + 196 * g**4 + 28 * g**5) + b * (31 + 330 * g + 825 * g**2 '
        '+ 972 * g**3 + 612 * g**4 + 192 * g**5 + 18 * g**6)) + 4 * a**4 * (- 1 + 168 * g + 472 '
        '* g**2 + 588 * g**3 + 561 * g**4 + 432 * g**5 + 180 * g**6 + 180 * b**6 * (1 + g)**2 + '
        '24 * b**5 * (18 + 102 * g + 98 * g**2 + 27 * g**3) + b**4 * (561 + 6468 * g + 9624 * '
        'g**2 + 5112 * g**3 + 936 * g**4) + 12 * b**3 * (49 + 757 * g + 1505 * g**2 + 1196 * '
        'g**3 + 426 * g**4 + 54 * g**5) + 4 * b * (42 + 650 * g + 1788 * g**2 + 2271 * g**3 + '
        '1617 * g**4 + 612 * g**5 + 90 * g**6) + 2 * b**2 * (236 + 3576 * g + 8631 * g**2 + 9030 '
        '* g**3 + 4812 * g**4 + 1176 * g**5 + 90 * g**6)) + 4 * a * (3 + 41 * g + 116 * g**2 + '
        '162 * g**3 + 168 * g**4 + 124 * g**5 + 72 * g**6 + 72 * b**6 * (1 + g)**5 + 4 * b**5 * '
        '(31 + 330 * g + 825 * g**2 + 972 * g**3 + 612 * g**4 + 192 * g**5 + 18 * g**6) + 4 * '
        'b**4 * (42 + 650 * g + 1788 * g**2 + 2271 * g**3 + 1617 * g**4 + 612 * g**5 + 90 * '
        'g**6) + b * (41 + 570 * g + 1812 * g**2 + 2816 * g**3 + 2600 * g**4 + 1320 * g**5 + 360 '
        '* g**6) + 2 * b**2 * (58 + 906 * g + 2832 * g**2 + 4189 * g**3 + 3576 * g**4 + 1650 * '
        'g**5 + 360 * g**6) + 2 * b**3 * (81 + 1408 * g + 4189 * g**2 + 5778 * g**3 + 4542 * '
        'g**4 + 1944 * g**5 + 360 * g**6)) + 8 * a**3 * (1 + 81 * g + 219 * g**2 + 271 * g**3 + '
        '294 * g**4 + 258 * g**5 + 120 * g**6 + 120 * b**6 * (1 + g)**3 + 6 * b**5 * (43 + 324 * '
        'g + 482 * g**2 + 276 * g**3 + 54 * g**4) + 6 * b**4 * (49 + 757 * g + 1505 * g**2 + '
        '1196 * g**3 + 426 * g**4 + 54 * g**5) + b**3 * (271 + 5778 * g + 14082 * g**2 + 14328 * '
        'g**3 + 7176 * g**4 + 1656 * g**5 + 120 * g**6) + b * (81 + 1408 * g + 4189 * g**2 + '
        '5778 * g**3 + 4542 * g**4 + 1944 * g**5 + 360 * g**6) + b**2 * (219 + 4189 * g + 11592 '
        '* g**2 + 14082 * g**3 + 9030 * g**4 + 2892 * g**5 + 360 * g**6)) + 8 * a**2 * (3 + 58 * '
        'g + 162 * g**2 + 219 * g**3 + 236 * g**4 + 186 * g**5 + 90 * g**6 + 90 * b**6 * (1 + '
        'g)**4 + 6 * b**5 * (31 + 275 * g + 550 * g**2 + 482 * g**3 + 196 * g**4 + 28 * g**5) + '
        'b**4 * (236 + 3576 * g + 8631 * g**2 + 9030 * g**3 + 4812 * g**4 + 1176 * g**5 + 90 * '
        'g**6) + 3 * b**2 * (54 + 944 * g + 2838 * g**2 + 3864 * g**3 + 2877 * g**4 + 1100 * '
        'g**5 + 180 * g**6) + b * (58 + 906 * g + 2832 * g**2 + 4189 * g**3 + 3576 * g**4 + 1650 '
        '* g**5 + 360 * g**6) + b**3 * (219 + 4189 * g + 11592 * g**2 + 14082 * g**3 + 9030 * '
        'g**4 + 2892 * g**5 + 360 * g**6))'
    ),
    'dp3_pos3_num': (
        '24 * (1 + 10 * g + 32 * g**2 + 48 * g**3 + 36 * g**4 + 8 * g**5 + 8 * b**5 * (1 + g)**4 '
        '+ 8 * a**5 * (1 + b + g)**4 + 4 * b**4 * (9 + 44 * g + 80 * g**2 + 68 * g**3 + 25 * '
        'g**4 + 2 * g**5) + 8 * b**3 * (6 + 37 * g + 80 * g**2 + 78 * g**3 + 34 * g**4 + 4 * '
        'g**5) + 4 * b**2 * (8 + 60 * g + 147 * g**2 + 160 * g**3 + 80 * g**4 + 12 * g**5) + 2 * '
        'b * (5 + 44 * g + 120 * g**2 + 148 * g**3 + 88 * g**4 + 16 * g**5) + 4 * a**4 * (5 + 2 '
        '* b**5 + 24 * g + 40 * g**2 + 32 * g**3 + 13 * g**4 + 2 * g**5 + b**4 * (19 + 18 * g) + '
        'b**3 * (50 + 96 * g + 40 * g**2) + 2 * b**2 * (29 + 84 * g + 72 * g**2 + 20 * g**3) + 2 '
        '* b * (15 + 58 * g + 75 * g**2 + 42 * g**3 + 9 * g**4)) + 8 * a**3 * (3 + 17 * g + 34 * '
        'g**2 + 35 * g**3 + 19 * g**4 + 4 * g**5 + 4 * b**5 * (1 + g) + b**4 * (25 + 48 * g + 20 '
        '* g**2) + b**3 * (52 + 151 * g + 125 * g**2 + 30 * g**3) + b**2 * (52 + 201 * g + 246 * '
        'g**2 + 122 * g**3 + 20 * g**4) + b * (23 + 110 * g + 177 * g**2 + 133 * g**3 + 45 * '
        'g**4 + 4 * g**5)) + 4 * a**2 * (4 + 28 * g + 69 * g**2 + 84 * g**3 + 52 * g**4 + 12 * '
        'g**5 + 12 * b**5 * (1 + g)**2 + 2 * b**4 * (31 + 90 * g + 78 * g**2 + 20 * g**3) + 2 * '
        'b**3 * (53 + 210 * g + 267 * g**2 + 128 * g**3 + 20 * g**4) + 6 * b**2 * (15 + 75 * g + '
        '123 * g**2 + 86 * g**3 + 25 * g**4 + 2 * g**5) + b * (35 + 210 * g + 420 * g**2 + 388 * '
        'g**3 + 168 * g**4 + 24 * g**5)) + 2 * a * (3 + 26 * g + 74 * g**2 + 100 * g**3 + 68 * '
        'g**4 + 16 * g**5 + 16 * b**5 * (1 + g)**3 + 4 * b**4 * (19 + 74 * g + 99 * g**2 + 54 * '
        'g**3 + 9 * g**4) + 4 * b**3 * (28 + 142 * g + 243 * g**2 + 175 * g**3 + 51 * g**4 + 4 * '
        'g**5) + 2 * b**2 * (41 + 258 * g + 528 * g**2 + 470 * g**3 + 186 * g**4 + 24 * g**5) + '
        'b * (28 + 210 * g + 498 * g**2 + 536 * g**3 + 276 * g**4 + 48 * g**5)))'
    ),
    'dp3_pos3_den': (
        '(1 + 10 * g + 36 * g**2 + 64 * g**3 + 60 * g**4 + 24 * g**5 + 24 * b**5 * (1 + g)**5 + '
        '24 * a**5 * (1 + b + g)**5 + 12 * b**4 * (1 + g)**2 * (5 + 20 * g + 23 * g**2 + 10 * '
        'g**3) + 16 * b**3 * (4 + 28 * g + 72 * g**2 + 90 * g**3 + 57 * g**4 + 15 * g**5) + 12 * '
        'b**2 * (3 + 24 * g + 69 * g**2 + 96 * g**3 + 68 * g**4 + 20 * g**5) + 2 * b * (5 + 45 * '
        'g + 144 * g**2 + 224 * g**3 + 180 * g**4 + 60 * g**5) + 12 * a**4 * (1 + b + g)**2 * (5 '
        '+ 20 * g + 23 * g**2 + 10 * g**3 + 10 * b**3 * (1 + g) + b**2 * (23 + 46 * g + 16 * '
        'g**2) + 2 * b * (10 + 30 * g + 23 * g**2 + 5 * g**3)) + 16 * a**3 * (4 + 28 * g + 72 * '
        'g**2 + 90 * g**3 + 57 * g**4 + 15 * g**5 + 15 * b**5 * (1 + g)**2 + 3 * b**4 * (19 + 57 '
        '* g + 50 * g**2 + 13 * g**3) + 3 * b**3 * (30 + 120 * g + 155 * g**2 + 78 * g**3 + 13 * '
        'g**4) + 3 * b**2 * (24 + 120 * g + 206 * g**2 + 155 * g**3 + 50 * g**4 + 5 * g**5) + b '
        '* (28 + 168 * g + 360 * g**2 + 360 * g**3 + 171 * g**4 + 30 * g**5)) + 12 * a**2 * (3 + '
        '24 * g + 69 * g**2 + 96 * g**3 + 68 * g**4 + 20 * g**5 + 20 * b**5 * (1 + g)**3 + b**4 '
        '* (68 + 272 * g + 366 * g**2 + 200 * g**3 + 36 * g**4) + 4 * b**3 * (24 + 120 * g + 206 '
        '* g**2 + 155 * g**3 + 50 * g**4 + 5 * g**5) + 2 * b * (12 + 84 * g + 207 * g**2 + 240 * '
        'g**3 + 136 * g**4 + 30 * g**5) + b**2 * (69 + 414 * g + 864 * g**2 + 824 * g**3 + 366 * '
        'g**4 + 60 * g**5)) + 2 * a * (5 + 45 * g + 144 * g**2 + 224 * g**3 + 180 * g**4 + 60 * '
        'g**5 + 60 * b**5 * (1 + g)**4 + 12 * b**4 * (15 + 75 * g + 136 * g**2 + 114 * g**3 + 43 '
        '* g**4 + 5 * g**5) + 12 * b**2 * (12 + 84 * g + 207 * g**2 + 240 * g**3 + 136 * g**4 + '
        '30 * g**5) + 8 * b**3 * (28 + 168 * g + 360 * g**2 + 360 * g**3 + 171 * g**4 + 30 * '
        'g**5) + 3 * b * (15 + 120 * g + 336 * g**2 + 448 * g**3 + 300 * g**4 + 80 * g**5)))'
    ),
    'dp3_calB_den': (
        '((1 + 2 * g + 2 * b * (1 + g) + 2 * a * (1 + b + g)) * (1 + 10 * g + 36 * g**2 + 64 * '
        'g**3 + 60 * g**4 + 24 * g**5 + 24 * b**5 * (1 + g)**5 + 24 * a**5 * (1 + b + g)**5 + 12 '
        '* b**4 * (1 + g)**2 * (5 + 20 * g + 23 * g**2 + 10 * g**3) + 16 * b**3 * (4 + 28 * g + '
        '72 * g**2 + 90 * g**3 + 57 * g**4 + 15 * g**5) + 12 * b**2 * (3 + 24 * g + 69 * g**2 + '
        '96 * g**3 + 68 * g**4 + 20 * g**5) + 2 * b * (5 + 45 * g + 144 * g**2 + 224 * g**3 + '
        '180 * g**4 + 60 * g**5) + 12 * a**4 * (1 + b + g)**2 * (5 + 20 * g + 23 * g**2 + 10 * '
        'g**3 + 10 * b**3 * (1 + g) + b**2 * (23 + 46 * g + 16 * g**2) + 2 * b * (10 + 30 * g + '
        '23 * g**2 + 5 * g**3)) + 16 * a**3 * (4 + 28 * g + 72 * g**2 + 90 * g**3 + 57 * g**4 + '
        '15 * g**5 + 15 * b**5 * (1 + g)**2 + 3 * b**4 * (19 + 57 * g + 50 * g**2 + 13 * g**3) + '
        '3 * b**3 * (30 + 120 * g + 155 * g**2 + 78 * g**3 + 13 * g**4) + 3 * b**2 * (24 + 120 * '
        'g + 206 * g**2 + 155 * g**3 + 50 * g**4 + 5 * g**5) + b * (28 + 168 * g + 360 * g**2 + '
        '360 * g**3 + 171 * g**4 + 30 * g**5)) + 12 * a**2 * (3 + 24 * g + 69 * g**2 + 96 * g**3 '
        '+ 68 * g**4 + 20 * g**5 + 20 * b**5 * (1 + g)**3 + b**4 * (68 + 272 * g + 366 * g**2 + '
        '200 * g**3 + 36 * g**4) + 4 * b**3 * (24 + 120 * g + 206 * g**2 + 155 * g**3 + 50 * '
        'g**4 + 5 * g**5) + 2 * b * (12 + 84 * g + 207 * g**2 + 240 * g**3 + 136 * g**4 + 30 * '
        'g**5) + b**2 * (69 + 414 * g + 864 * g**2 + 824 * g**3 + 366 * g**4 + 60 * g**5)) + 2 * '
        'a * (60 * b**5 * (1 + g)**4 + 12 * b**4 * (15 + 75 * g + 136 * g**2 + 114 * g**3 + 43 * '
        'g**4 + 5 * g**5) + 12 * b**2 * (12 + 84 * g + 207 * g**2 + 240 * g**3 + 136 * g**4 + 30 '
        '* g**5) + 8 * b**3 * (28 + 168 * g + 360 * g**2 + 360 * g**3 + 171 * g**4 + 30 * g**5) '
        '+ 5 + 45 * g + 144 * g**2 + 224 * g**3 + 180 * g**4 + 60 * g**5 + 3 * b * (15 + 120 * g '
        '+ 336 * g**2 + 448 * g**3 + 300 * g**4 + 80 * g**5))))'
    ),
}

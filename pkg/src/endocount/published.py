"""Class-count tables for n, m <= 6 as printed in the source publication.

Values are kept verbatim (thousands separators included) so they are
compared as decimal strings, never through floats.  Three cells disagree with
the published closed forms; they are listed in ``SUSPECTED_ERRATA``.
"""

PRINTED = {
    "semigroup": {
        (1, 1): "1", (2, 1): "3", (3, 1): "7", (4, 1): "19", (5, 1): "47", (6, 1): "130",
        (1, 2): "2", (2, 2): "21", (3, 2): "304", (4, 2): "6,915", (5, 2): "207,258", (6, 2): "7,773,622",
        (1, 3): "3", (2, 3): "105", (3, 3): "9,958", (4, 3): "2,079,567", (5, 3): "746,331,322", (6, 3): "409,893,967,167",
        (1, 4): "4", (2, 4): "465", (3, 4): "288,280", (4, 4): "556,898,155", (5, 4): "2,406,091,382,736", (6, 4): "19,560,646,482,079,624",
        (1, 5): "5", (2, 5): "1,953", (3, 5): "7,973,053", (4, 5): "144,228,436,231", (5, 5): "7,567,019,254,708,782", (6, 5): "916,131,223,607,107,471,135",
        (1, 6): "6", (2, 6): "8,001", (3, 6): "217,032,088", (4, 6): "37,030,504,349,475", (5, 6): "23,677,181,825,841,420,408", (6, 6): "42,770,482,829,102,570,213,645,988",
    },
    "uniform": {
        (1, 1): "1", (2, 1): "3", (3, 1): "7", (4, 1): "19", (5, 1): "47", (6, 1): "130",
        (1, 2): "1", (2, 2): "10", (3, 2): "129", (4, 2): "2,836", (5, 2): "83,061", (6, 2): "3,076,386",
        (1, 3): "1", (2, 3): "36", (3, 3): "3,303", (4, 3): "700,624", (5, 3): "254,521,561", (6, 3): "141,131,630,530",
        (1, 4): "1", (2, 4): "136", (3, 4): "88,641", (4, 4): "178,981,696", (5, 4): "794,756,352,216", (6, 4): "6,581,201,266,858,896",
        (1, 5): "1", (2, 5): "528", (3, 5): "7,973,053", (4, 5): "45,813,378,304", (5, 5): "2,483,530,604,092,546", (6, 5): "307,047,288,863,992,988,160",
        (1, 6): "1", (2, 6): "2,080", (3, 6): "64,570,689", (4, 6): "11,728,130,323,456", (5, 6): "7,761,021,959,623,948,401", (6, 6): "14,325,590,271,500,876,382,987,456",
    },
    "monoid": {
        (1, 1): "2", (2, 1): "6", (3, 1): "16", (4, 1): "45", (5, 1): "121", (6, 1): "338",
        (1, 2): "3", (2, 2): "28", (3, 2): "390", (4, 2): "8,442", (5, 2): "244,910", (6, 2): "8,967,034",
        (1, 3): "4", (2, 3): "120", (3, 3): "10,760", (4, 3): "2,180,845", (5, 3): "770,763,470", (6, 3): "419,527,164,799",
        (1, 4): "5", (2, 4): "496", (3, 4): "295,603", (4, 4): "563,483,404", (5, 4): "2,421,556,983,901", (6, 4): "19,636,295,549,860,505",
        (1, 5): "6", (2, 5): "2,016", (3, 5): "8,039,304", (4, 5): "144,651,898,755", (5, 5): "2,370,422,688,990,078", (6, 5): "916,720,535,022,517,503,173",
        (1, 6): "7", (2, 6): "8,128", (3, 6): "217,629,416", (4, 6): "37,057,640,711,850", (5, 6): "23,683,244,198,577,149,289", (6, 6): "42,775,066,732,111,188,868,070,978",
    },
}

# uniform (3, 5) repeats the semigroup cell and contradicts 1/6 (3^(3m) + 5*3^m);
# monoid (5, 5) is smaller than the semigroup count for the same (n, m);
# uniform (6, 3) is 10 more than the printed n = 6 uniform closed form at m = 3.
SUSPECTED_ERRATA = frozenset({("uniform", 3, 5), ("monoid", 5, 5), ("uniform", 6, 3)})

# Printed closed forms used to adjudicate the errata, transcribed into the
# plain-text grammar accepted by closed_form.evaluate_text.
PRINTED_CLOSED_FORMS = {
    ("uniform", 3): "1/6 * (3^(3m) + 3*3^m + 2*3^m)",
    ("uniform", 6): (
        "1/720 * (6^(6m) + 15*4^(4m)*6^m + 45*2^(2m)*6^(2m) + 15*6^(3m)"
        " + 40*3^(3m)*6^m + 120*3^m*4^m + 40*6^(2m) + 90*2^(2m)*6^m"
        " + 90*2^m*6^m + 144*6^m + 120*6^m)"
    ),
    ("monoid", 5): (
        "1/120 * (((5^(m+1)-1)/4)^5 + 10*((3^(m+1)-1)/2)^3*((5^(m+1)-1)/4)"
        " + 15(m+1)*((5^(m+1)-1)/4)^2 + 20*(2^(m+1)-1)^2*((5^(m+1)-1)/4)"
        " + 20*(2^(m+1)-1)*((3^(m+1)-1)/2) + 30(m+1)*((5^(m+1)-1)/4)"
        " + 24*((5^(m+1)-1)/4))"
    ),
}

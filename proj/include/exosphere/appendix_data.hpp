#pragma once

namespace exosphere {

/// Prime-factor tables for coker(J_n) and Theta_n^bp, 7 <= n <= 100,
/// transcribed from the published tables.
///
/// Line grammar (UTF-8, `#` starts a comment line):
///   n|cokerJ=<tokens>|bp=<tokens>    tokens comma-separated, ascending
///   n|trivial                        Theta_n = 0, row omitted from print
///
/// coker-J tokens may carry a trailing `*` or `**` annotation as printed.
/// bp tokens are kept byte-for-byte as published, including unfactored
/// `num(B_2k/2k)` placeholders; they exist only so published cells can be
/// audited against recomputed values. Live bp data is always recomputed.
///
/// Two transcription repairs, both mechanical:
///   row 35: the printed cell drops the Mersenne factor 131071 = 2^17 - 1
///           while keeping its cofactor 43867; restored.
///   row 63: the printed cell shows 2147493647, a digit typo for the
///           Mersenne prime 2^31 - 1 = 2147483647; restored.
/// Substantive divergences between printed cells and recomputed values are
/// NOT repaired here; they surface as [!paper] flags in emitted tables.
inline constexpr const char* kAppendixTable = R"TBL(
7|cokerJ=2|bp=2
8|cokerJ=2|bp=
9|cokerJ=2*|bp=2
10|cokerJ=2,3*|bp=
11|cokerJ=2|bp=2,31
12|trivial
13|cokerJ=3|bp=
14|cokerJ=2|bp=
15|cokerJ=2|bp=2,127
16|cokerJ=2|bp=
17|cokerJ=2*|bp=2
18|cokerJ=2|bp=
19|cokerJ=2|bp=2,7,73
20|cokerJ=2,3|bp=
21|cokerJ=2*|bp=2
22|cokerJ=2|bp=
23|cokerJ=2,3*|bp=2,23,89,691
24|cokerJ=2|bp=
25|cokerJ=2|bp=2
26|cokerJ=2,3|bp=
27|cokerJ=2|bp=2,8191
28|cokerJ=2|bp=
29|cokerJ=3|bp=
30|cokerJ=2**,3|bp=
31|cokerJ=2|bp=2,7,31,151,3617
32|cokerJ=2|bp=
33|cokerJ=2*|bp=2
34|cokerJ=2|bp=
# restored Mersenne factor 131071 (see header)
35|cokerJ=2|bp=2,43867,131071
36|cokerJ=2,3|bp=
37|cokerJ=2,3|bp=2
38|cokerJ=2,3*,5*|bp=
39|cokerJ=2,3|bp=2,283,617
40|cokerJ=2,3|bp=
41|cokerJ=2|bp=2
42|cokerJ=2,3*|bp=
43|cokerJ=2|bp=2,7,127,131,337,593
44|cokerJ=2|bp=
45|cokerJ=2,3,5|bp=2
46|cokerJ=2,3|bp=
47|cokerJ=2,3|bp=2,47,103,178481,2294797
48|cokerJ=2|bp=
49|cokerJ=2,3|bp=2
50|cokerJ=2,3*|bp=
51|cokerJ=2|bp=2,657931
52|cokerJ=2,3|bp=
53|cokerJ=2|bp=2
54|cokerJ=2|bp=
55|cokerJ=2,3|bp=2,7,73,9349,262657,362903
56|trivial
57|cokerJ=2|bp=2
58|cokerJ=2|bp=
59|cokerJ=2|bp=2,233,1103,1721,2089,1001259881
60|cokerJ=2|bp=
61|trivial
62|cokerJ=2,3|bp=
# digit typo 2147493647 repaired to 2^31 - 1 (see header)
63|cokerJ=2|bp=2,37,683,305065927,2147483647
64|cokerJ=2|bp=
65|cokerJ=2,3|bp=2
66|cokerJ=2|bp=
67|cokerJ=2|bp=2,7,23,89,5999479,num(B_34/34)
68|cokerJ=2,3|bp=
69|cokerJ=2|bp=2
70|cokerJ=2|bp=
71|cokerJ=2|bp=2,31,71,127,122921,num(B_36/36)
72|cokerJ=2,3|bp=
73|cokerJ=2|bp=2
74|cokerJ=2,3*|bp=
75|cokerJ=2,3|bp=2,223,616318177,num(B_38/38)
76|cokerJ=2,5|bp=
77|cokerJ=2|bp=2
78|cokerJ=2,3|bp=
79|cokerJ=2|bp=2,7,79,8191,121369,137616929,1897170067619
80|cokerJ=2|bp=
81|cokerJ=2,3|bp=2
82|cokerJ=2,3,7*|bp=
83|cokerJ=2,5|bp=2,13367,164511353,num(B_42/42)
84|cokerJ=2,3|bp=
85|cokerJ=2,3|bp=2
86|cokerJ=2,3*,5*|bp=
87|cokerJ=2|bp=2,59,431,8089,9719,2099863,2947939,1798482437
88|cokerJ=2|bp=
89|cokerJ=2|bp=2
90|cokerJ=2,3*|bp=
91|cokerJ=2,3|bp=2,7,31,73,151,631,23311,383799511,67568238839737
92|cokerJ=2,3|bp=
93|cokerJ=2,3,5|bp=2
94|cokerJ=2,3|bp=
95|cokerJ=2,3|bp=2,653,2351,4513,56039,10610063,13264529,31184907679,59862819377,140737488355327,153298748932447906241
96|cokerJ=2|bp=
97|cokerJ=2|bp=2
98|cokerJ=2|bp=
99|cokerJ=2,3|bp=2,127,417202699,4432676798593,562949953421311,47464429777438199
100|cokerJ=2,3|bp=
)TBL";

}  // namespace exosphere

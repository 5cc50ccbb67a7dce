# generator of H^1(RP^2; F2) on rp2.sc
# degree 1
0 2
0 3
1 2
1 4
3 4

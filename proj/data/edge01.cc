# degree 1
0 1

# degree 1
1 2

static void noop2(){}

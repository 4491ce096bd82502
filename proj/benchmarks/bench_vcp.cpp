static void noop(){}

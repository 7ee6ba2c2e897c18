# Fox calculus and metabelian computations

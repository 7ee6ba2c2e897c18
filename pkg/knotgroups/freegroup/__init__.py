# Free group words and endomorphisms

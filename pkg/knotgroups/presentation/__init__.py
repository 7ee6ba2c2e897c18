# Presentations, Tietze moves and abelian invariants

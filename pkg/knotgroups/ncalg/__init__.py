# Noncommutative series and finite algebras

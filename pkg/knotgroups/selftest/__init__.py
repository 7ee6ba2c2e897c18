# Randomized property checks

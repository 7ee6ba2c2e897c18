# Knot group computation package

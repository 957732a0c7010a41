# Garland Bracket Toolkit - Source Package

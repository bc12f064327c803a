# Feature packages: numeric, pythagoras, descent, diophantus20, fermat4, propertySuite, cli

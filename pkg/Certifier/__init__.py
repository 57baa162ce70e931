# Heawood Certifier package

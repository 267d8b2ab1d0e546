# Tests package for flipcount

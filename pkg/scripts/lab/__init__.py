"""graphon_lab command line tools."""

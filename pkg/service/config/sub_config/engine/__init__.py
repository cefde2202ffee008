"""Engine configs: arithmetic limits and enumeration bounds."""

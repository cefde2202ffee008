"""Output configs: JSON layout, symbols and DOT rendering."""

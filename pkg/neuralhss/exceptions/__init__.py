"""Neural-HSS exceptions module."""

"""Neural-HSS data models."""

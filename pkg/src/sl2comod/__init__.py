"""Exact comodules over the coordinate Hopf algebra of SL2."""

"""Exact computations with an extension of the Lawrence-Krammer representation to C_n."""

"""refuelkit: exact solver, baselines and benchmarks for the airplane refueling problem.

Processing jobs j with time p_j and weight w_j on one machine, the library
maximizes Σ w_j / C_j. Reversing the processing order gives the order in
which airplanes drop out of a refueling fleet.
"""

__version__ = "0.1.0"

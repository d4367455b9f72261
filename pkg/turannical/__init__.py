"""
Turannical: restriction hypergraphs for Turán-type problems

Exact extremal formulas and constructions, exact decision of the
(ε-)Turánnical property, structural classification of near-extremal graphs,
and seeded Monte Carlo threshold experiments for random restrictions.
"""

__version__ = "0.9.0"
__author__ = "Turannical Contributors"
__license__ = "GNU General Public License v3"

# coding: utf-8

# # Sampling Lagrangian points
#
# A symmetric n x n matrix S gives an isotropic subspace spanned by the rows of
# [I | S reversed]. Its maximal minors are Plücker coordinates, which should be
# killed by B.

# In[1]:

import random

from lagrangian_sections import SymplecticLabels, kernel_membership, sample_lagrangian
from lagrangian_sections.contraction import convention_survey, random_symmetric

labels = SymplecticLabels(3)
rng = random.Random(1)
S = random_symmetric(3, 2, rng)
pt = sample_lagrangian(S, labels, 2)
kernel_membership(pt)


# Over GF(3) the plain all-ones forms stop annihilating samples once n >= 3,
# while the signed variant keeps working.

# In[2]:

pt3 = sample_lagrangian(random_symmetric(3, 3, rng), labels, 3)
kernel_membership(pt3, "unsigned"), kernel_membership(pt3, "signed")


# A full survey over a few fields and sizes.

# In[3]:

convention_survey(ns=(2, 3, 4), fields=(2, 3, 5), samples=20, seed=0)

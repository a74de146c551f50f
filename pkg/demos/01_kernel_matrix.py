# coding: utf-8

# # The kernel matrix B
#
# Rows of B are labelled by (n-2)-subsets of {1..2n}, columns by n-subsets.
# A row alpha has a one in column alpha + {i, 2n+1-i} for every symplectic pair
# that misses alpha. Start with n = 4.

# In[1]:

from lagrangian_sections import SymplecticLabels, build_B, plane_census, plane_form

labels = SymplecticLabels(4)
B = build_B(labels)
B.shape


# Row weights give the plane census: how many linear forms have each number of terms.

# In[2]:

plane_census(labels)


# The four heaviest rows are the forms attached to a single pair.

# In[3]:

for alpha in [(1, 8), (2, 7), (3, 6), (4, 5)]:
    form = plane_form(alpha, labels)
    print(alpha, " + ".join("X" + "".join(map(str, t)) for t in form.terms))


# Columns with no symplectic pair never get hit. There are 2^n of them.

# In[4]:

sum(1 for w in B.col_weights() if w == 0)

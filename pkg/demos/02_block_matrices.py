# coding: utf-8

# # Recursive blocks and inclusion matrices
#
# L_k is assembled from A_k^0 by stacking identities and joining operands side by
# side with their bottoms aligned. M_m is built independently from subsets.

# In[1]:

from lagrangian_sections.blocks import a, a0, l_equals_m, l_matrix, m_matrix, triangles

print(a0(3))


# A_4^1 has fifteen rows and twenty columns, the same shape as M_6.

# In[2]:

A = a(4, 1)
A.shape, A == m_matrix(6)


# With lexicographic labels on both sides the two constructions agree entry by entry.

# In[3]:

for k in range(2, 8):
    res = l_equals_m(k)
    print(k, res["shape"], res["literal_equal"], res["equivalent"])


# Triangles split the ((m-2)/2)-subsets of m pair indices into disjoint pieces.

# In[4]:

[(T.prefix, len(T)) for T in triangles(8)]

# coding: utf-8

# # Direct-sum decomposition of B
#
# Grouping rows and columns by their unpaired labels turns B into a block
# diagonal matrix of inclusion matrices plus 2^n zero columns.

# In[1]:

from lagrangian_sections import SymplecticLabels, verify_theorem

rep = verify_theorem(SymplecticLabels(6), characteristics=(0, 2, 3, 5))
rep.census, rep.zero_column_count, rep.all_verified


# Ranks of B match the sum of block ranks in every characteristic.

# In[2]:

{p: (r.direct, r.block_sum) for p, r in rep.rank_table.items()}


# Odd n works the same way, except every class keeps at least one unpaired label.

# In[3]:

rep7 = verify_theorem(SymplecticLabels(7), characteristics=(0, 2, 3))
rep7.census, {p: r.direct for p, r in rep7.rank_table.items()}


# Characteristic 0 above 512 columns uses ranks modulo random 62-bit primes.

# In[4]:

rep7.rank_table[0].certificate

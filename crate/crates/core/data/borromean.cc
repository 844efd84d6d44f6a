# Borromean rings: two disks F2, F3 each clasping the disk F1 twice.
ccomplex v1
components 3
genus 0 0 0
word 1: c1- c3- c2+ c4+
word 2: c1- c2+
word 3: c3- c4+

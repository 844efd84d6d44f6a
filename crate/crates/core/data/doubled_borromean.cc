# Two Borromean clasp patterns read in sequence; triple linking number 2.
ccomplex v1
components 3
genus 0 0 0
word 1: c1- c3- c2+ c4+ c5- c7- c6+ c8+
word 2: c1- c2+ c5- c6+
word 3: c3- c4+ c7- c8+

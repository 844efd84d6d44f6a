# Hopf link: two disks meeting in one positive clasp.
ccomplex v1
components 2
genus 0 0
word 1: a+
word 2: a+

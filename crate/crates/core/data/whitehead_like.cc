# Two components, linking number 1, clasps read in different orders.
ccomplex v1
components 2
genus 0 0
word 1: a+ b- c+
word 2: c+ a+ b-

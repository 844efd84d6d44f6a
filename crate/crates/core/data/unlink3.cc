# Three-component unlink: three disjoint disks.
ccomplex v1
components 3
genus 0 0 0

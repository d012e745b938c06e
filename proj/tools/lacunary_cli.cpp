#include "lacunary/intpoly.hpp"

int main() { return 0; }

#include <stdio.h>
void greet(FILE *out);

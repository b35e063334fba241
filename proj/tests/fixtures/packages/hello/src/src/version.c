#include "version.h"

const char *build_stamp = "built on " __DATE__;

const char *hello_version(void) {
  return HELLO_VERSION;
}

/* Compiles the public header as C and exercises a round trip. */
#include <stdio.h>
#include <string.h>

#include "hecke/hecke.h"

int main(void) {
  hk_algebra* h = NULL;
  hk_element* e = NULL;
  char* text = NULL;
  int rc = 1;
  if (hk_algebra_create(1, 2, &h) != HK_OK) goto done;
  if (hk_element_parse(h, "s1 s1", 0, &e) != HK_OK) goto done;
  if (hk_element_render(e, HK_FORMAT_TEXT, &text) != HK_OK) goto done;
  rc = strcmp(text, "(q - q^-1)*[s1] + 1*[]") == 0 ? 0 : 1;
  printf("%s\n", text);
done:
  if (rc != 0) fprintf(stderr, "failed: %s\n", hk_last_error());
  hk_string_free(text);
  hk_element_destroy(e);
  hk_algebra_destroy(h);
  return rc;
}

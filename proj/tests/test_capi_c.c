#include <stdio.h>
#include <string.h>

#include "nhls/nhls.h"

int main(void) {
  nhls_hamiltonian* h = NULL;
  nhls_params p = {1.0, 0.5, 0.5};
  double re = 0.0, im = 0.0;
  if (nhls_hamiltonian_ssh_segment(8, p, 1, &h) != NHLS_OK) {
    fprintf(stderr, "ssh_segment: %s\n", nhls_last_error());
    return 1;
  }
  if (nhls_hamiltonian_dim(h) != 8 || nhls_hamiltonian_entry(h, 1, 1, &re, &im) != NHLS_OK || im != -0.5) {
    fprintf(stderr, "unexpected entry\n");
    return 1;
  }
  nhls_hamiltonian_free(h);
  if (nhls_hamiltonian_ssh_segment(7, p, 1, &h) != NHLS_ERR_INVALID_ARGUMENT || strlen(nhls_last_error()) == 0) {
    fprintf(stderr, "odd segment accepted\n");
    return 1;
  }
  printf("c api ok (%s)\n", nhls_version());
  return 0;
}

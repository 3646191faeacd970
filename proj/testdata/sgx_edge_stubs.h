/* Minimal stand-ins for the SGX edge-routine environment so that generated
 * proxies are self-contained, syntax-checkable C. This is a test fixture,
 * not the Intel SDK. */

#ifndef SGX_EDGE_STUBS_H
#define SGX_EDGE_STUBS_H

#include <stddef.h>
#include <stdint.h>
#include <string.h>

typedef int sgx_status_t;

#define SGX_SUCCESS 0
#define SGX_ERROR_UNEXPECTED 1
#define SGX_CDECL
#define SGX_CAST(type, item) ((type)(item))
#define CHECK_REF_POINTER(ptr, siz) \
    do {                            \
        (void)(ptr);                \
        (void)(siz);                \
    } while (0)

void* sgx_ocalloc(size_t size);
sgx_status_t sgx_ocall(unsigned int index, void* ms);
void sgx_ocfree(void);

#endif /* SGX_EDGE_STUBS_H */

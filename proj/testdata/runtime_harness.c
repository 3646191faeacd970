/* Runtime demonstration harness: compiles against generated proxy code and
 * counts how many secret-patterned bytes from the trusted side physically
 * reach the untrusted marshalling buffer.
 *
 * Usage (from the repository root, per strategy):
 *   ./build/tools/padguard generate testdata/demo.edl --strategy shallow --out /tmp/gen
 *   gcc -std=c99 -O0 -I /tmp/gen -I testdata \
 *       testdata/runtime_harness.c /tmp/gen/ocall_test_struct_proxy.c -o /tmp/demo
 *   /tmp/demo          # prints 7 for shallow, 0 for deep/memset/selective
 *
 * The trusted struct's memory is pre-filled with 0xAA before its members
 * are initialized, modeling a previously used allocation; the arena plays
 * the role of untrusted memory. Note the packed strategy changes the
 * marshalling layout, so this particular mirror struct does not apply to it.
 */

#include <stdio.h>
#include <string.h>

#include "demo_types.h"
#include "sgx_edge_stubs.h"

static unsigned char arena[4096];
static size_t arena_off;

void* sgx_ocalloc(size_t n) {
    void* p = arena + arena_off;
    arena_off += n;
    return p;
}

sgx_status_t sgx_ocall(unsigned int idx, void* ms) {
    (void)idx;
    (void)ms;
    return SGX_SUCCESS;
}

void sgx_ocfree(void) {}

/* Mirrors the generated ms_ocall_test_struct_t member order. */
typedef struct {
    test_struct ms_ts;
    int ms_val;
} ms_mirror_t;

sgx_status_t SGX_CDECL ocall_test_struct(test_struct ts, int val);

int main(void) {
    union {
        test_struct ts;
        unsigned char raw[sizeof(test_struct)];
    } u;
    memset(u.raw, 0xAA, sizeof u.raw); /* stale secrets in the allocation */
    u.ts.val1 = 1;
    u.ts.val2 = 2;
    u.ts.val3 = 3;

    memset(arena, 0x55, sizeof arena);
    arena_off = 0;
    ocall_test_struct(u.ts, 7);

    const ms_mirror_t* ms = (const ms_mirror_t*)arena;
    const unsigned char* bytes = (const unsigned char*)&ms->ms_ts;
    int secret = 0;
    for (size_t i = 0; i < sizeof(test_struct); ++i) {
        if (bytes[i] == 0xAA) secret++;
    }
    printf("%d\n", secret);
    return 0;
}

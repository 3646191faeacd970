/* Generated by padguard (strategy: deep). Do not edit. */

#include "sgx_edge_stubs.h"
#include "demo_types.h"

typedef struct ms_ecall_test_struct_t {
	test_struct ms_retval;
	char* ms_encrypted_input;
	size_t ms_input_size;
} ms_ecall_test_struct_t;

test_struct ecall_test_struct(char* encrypted_input, size_t input_size);

static sgx_status_t SGX_CDECL sgx_ecall_test_struct(void* pms)
{
	CHECK_REF_POINTER(pms, sizeof(ms_ecall_test_struct_t));
	ms_ecall_test_struct_t* ms = SGX_CAST(ms_ecall_test_struct_t*, pms);
	sgx_status_t status = SGX_SUCCESS;

	test_struct __retval = ecall_test_struct(ms->ms_encrypted_input, ms->ms_input_size);
	ms->ms_retval.val1 = __retval.val1;
	ms->ms_retval.val2 = __retval.val2;
	ms->ms_retval.val3 = __retval.val3;

	return status;
}

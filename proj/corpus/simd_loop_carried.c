void main()
{
    int i;
    int a[100];

#pragma omp simd
    for (i = 0; i < 99; i = i + 1) {
        a[i] = a[i + 1];
    }
}

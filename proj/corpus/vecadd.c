void main()
{
    int i;
    int a[1000];
    int b[1000];
    int c[1000];

#pragma omp parallel
    {
#pragma omp for
        for (i = 0; i < 1000; i = i + 1) {
            c[i] = a[i] + b[i];
        }
    }
}

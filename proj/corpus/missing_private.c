void main()
{
    int i;
    int tmp;
    int a[100];
    int b[100];

#pragma omp parallel
    {
#pragma omp for
        for (i = 0; i < 100; i = i + 1) {
            tmp = a[i] + 1;
            b[i] = tmp;
        }
    }
}

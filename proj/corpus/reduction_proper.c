void main()
{
    int i;
    int sum;
    int total;
    int a[100];

#pragma omp parallel
    {
#pragma omp for reduction(+: sum)
        for (i = 0; i < 100; i = i + 1) {
            sum = sum + a[i];
        }
#pragma omp single
        { total = sum; }
    }
}

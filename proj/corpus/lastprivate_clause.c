void main()
{
    int i;
    int last;
    int a[100];

#pragma omp parallel
    {
#pragma omp for lastprivate(last)
        for (i = 0; i < 100; i = i + 1) {
            last = a[i];
        }
    }
}

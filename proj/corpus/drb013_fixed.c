void main()
{
    int i;
    int error;
    int len;
    int a[1000];

    len = 1000;

#pragma omp parallel
    {
#pragma omp for
        for (i = 0; i < len; i = i + 1) {
            a[i] = a[i] + 1;
        }
#pragma omp single
        {
            error = a[9] + 1;
        }
    }
}

void main()
{
    int a[10];

#pragma omp parallel
    {
#pragma omp sections
        {
            { a[3] = 1; }
#pragma omp section
            { a[4] = 2; }
        }
    }
}

int x;

void main()
{
#pragma omp parallel
    {
        int local;
#pragma omp single nowait
        { x = 1; }
        local = x;
    }
}
